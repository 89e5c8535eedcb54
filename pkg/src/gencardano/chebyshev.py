"""Vieta-Lucas (modified Chebyshev) polynomials and their Cardano connection.

``Omega_n(2 cos t) = 2 cos(n t)``, i.e. ``Omega_n(x) = 2 T_n(x / 2)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .cardano import CardanoParams
from .errors import DomainError
from .poly import Polynomial


@dataclass(frozen=True)
class OmegaPoly:
    n: int
    coeffs: tuple[int, ...]  # ascending, exact integers

    @property
    def poly(self) -> Polynomial:
        return Polynomial([float(v) for v in self.coeffs])

    def __call__(self, x):
        acc = 0.0 * np.asarray(x, dtype=float)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def eval_exact(self, x: float) -> float:
        """Value at the float ``x`` computed in exact rational arithmetic."""
        xf = Fraction(x)
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * xf + a
        return float(acc)


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")


def omega_closed(n: int) -> OmegaPoly:
    _check_n(n)
    coeffs = [0] * (n + 1)
    for k in range(n // 2 + 1):
        sign = -1 if k % 2 else 1
        # n / (n - k) * C(n - k, k) is always an integer
        num = n * comb(n - k, k)
        val, rem = divmod(num, n - k)
        assert rem == 0
        coeffs[n - 2 * k] = sign * val
    return OmegaPoly(n, tuple(coeffs))


def omega_recurrence(n: int) -> OmegaPoly:
    _check_n(n)
    prev, cur = [0, 1], [-2, 0, 1]
    if n == 1:
        return OmegaPoly(1, tuple(prev))
    for _ in range(n - 2):
        nxt = [0] + cur
        for i, v in enumerate(prev):
            nxt[i] -= v
        prev, cur = cur, nxt
    return OmegaPoly(n, tuple(cur))


def chebyshev_t_check(n: int, samples: int = 100) -> float:
    """Largest deviation of ``Omega_n(2 cos t)`` from ``2 cos(n t)`` on ``t`` in [0, pi].

    The integer coefficients are evaluated exactly; floating-point Horner
    on the monomial basis loses several digits to cancellation by n ~ 25.
    """
    if samples < 1:
        raise DomainError("samples must be >= 1")
    om = omega_recurrence(n)
    theta = np.linspace(0.0, math.pi, samples)
    vals = np.array([om.eval_exact(2 * math.cos(t)) for t in theta])
    return float(np.max(np.abs(vals - 2 * np.cos(n * theta))))


def cardano_from_omega(params: CardanoParams) -> Polynomial:
    if params.c <= 0:
        raise DomainError("cardano_from_omega requires c > 0")
    n, c = params.n, params.c
    sc = math.sqrt(c)
    om = omega_recurrence(n).coeffs
    coeffs = np.array([a * sc ** (n - k) for k, a in enumerate(om)], dtype=float)
    coeffs[0] -= 2 * params.d
    return Polynomial(coeffs)


def cardano_recurrence_sequence(c: float, d: float, max_n: int) -> list[Polynomial]:
    """``[C_1, ..., C_max_n]`` from ``C_{k+2} = x C_{k+1} - c C_k + 2d (x - c - 1)``.

    Seeds are ``C_1 = x - 2d`` and ``C_2 = x**2 - 2c - 2d``. Even orders are
    produced as coefficients only.
    """
    if max_n < 3:
        raise DomainError("max_n must be >= 3")
    seq = [
        np.array([-2 * d, 1.0]),
        np.array([-2 * c - 2 * d, 0.0, 1.0]),
    ]
    while len(seq) < max_n:
        c1, c0 = seq[-1], seq[-2]
        nxt = np.concatenate(([0.0], c1))
        nxt[: c0.size] -= c * c0
        nxt[0] += 2 * d * (-c - 1)
        nxt[1] += 2 * d
        seq.append(nxt)
    return [Polynomial(s) for s in seq]
