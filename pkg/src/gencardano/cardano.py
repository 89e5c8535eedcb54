"""Odd-degree generalized Cardano polynomials and their closed-form roots.

For odd ``n = 2m + 1`` and real ``c, d`` the polynomial

    C(x) = x**n - sum_j B(m, j) * c**(m - j) * x**(2j + 1) - 2d

has the ``n`` roots ``p * w**j + q * w**-j`` with ``w = exp(2 pi i / n)``,
where ``p**n + q**n = 2d`` and ``p * q = c``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Optional

import numpy as np

from .errors import DomainError
from .poly import Polynomial

#: relative width of the band around D = 0 that takes the radical branch
DISCRIMINANT_ZERO_RTOL = 1e-12


@dataclass(frozen=True)
class CardanoParams:
    n: int
    c: float
    d: float

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n:
            raise DomainError(f"n must be an integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if self.n < 3 or self.n % 2 == 0:
            raise DomainError(f"n must be odd and >= 3, got {self.n}")
        if not (math.isfinite(self.c) and math.isfinite(self.d)):
            raise DomainError("c and d must be finite")
        object.__setattr__(self, "c", float(self.c))
        object.__setattr__(self, "d", float(self.d))

    @property
    def m(self) -> int:
        return (self.n - 1) // 2

    @property
    def D(self) -> float:
        return self.d * self.d - self.c ** self.n

    def _zero_band(self) -> float:
        return DISCRIMINANT_ZERO_RTOL * max(self.d * self.d, abs(self.c) ** self.n)

    def discriminant_is_zero(self) -> bool:
        """D within a relative band of zero, where the roots are repeated."""
        return abs(self.D) <= self._zero_band()

    def discriminant_is_negative(self) -> bool:
        """True when the trigonometric branch applies."""
        return self.D < -self._zero_band()

    def as_dict(self) -> dict:
        return {"n": self.n, "c": self.c, "d": self.d, "D": self.D}


class PQForm(Enum):
    REAL_RADICAL = "real_radical"
    CONJUGATE_PAIR = "conjugate_pair"


@dataclass(frozen=True)
class PQPair:
    p: complex
    q: complex
    form: PQForm
    alpha: Optional[float] = None


@dataclass(frozen=True)
class DepressedCubic:
    """``x**3 + 3 s x + t`` obtained from ``x**3 + a x**2 + b x + c``."""

    s: float
    t: float
    shift: float

    @classmethod
    def from_monic(cls, a: float, b: float, c: float) -> "DepressedCubic":
        s = b / 3 - a * a / 9
        t = c - a * b / 3 + 2 * a ** 3 / 27
        return cls(s=s, t=t, shift=a / 3)

    @property
    def Delta(self) -> float:
        return self.t * self.t + 4 * self.s ** 3

    def to_params(self) -> CardanoParams:
        return CardanoParams(3, -self.s, -self.t / 2)


# -- exact coefficients -------------------------------------------------------


def _check_mj(m: int, j: int) -> None:
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if not 0 <= j <= m - 1:
        raise DomainError(f"j must lie in [0, {m - 1}], got {j}")


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r != 0:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def b_coeff(m: int, j: int) -> int:
    """Integer coefficient of ``c**(m-j) x**(2j+1)`` in the reduction of ``x**(2m+1)``."""
    _check_mj(m, j)
    sign = -1 if (m - 1 - j) % 2 else 1
    return sign * _exact_div((2 * m + 1) * comb(m + j, 2 * j), 2 * j + 1)


def b_coeff_oracle(m: int, j: int) -> int:
    """Same coefficient, via the binomial/Kummer double-sum expansion.

    Each term is kept as an exact fraction; the total must be integral.
    """
    _check_mj(m, j)
    total = Fraction(0)
    for k in range(1, m - j + 1):
        sign = -1 if (m - j - k) % 2 else 1
        total += (
            sign
            * comb(2 * m + 1, k)
            * Fraction(2 * (m - k) + 1, m - k + 1 + j)
            * comb(m - k + 1 + j, 1 + 2 * j)
        )
    if total.denominator != 1:
        raise ArithmeticError(f"B({m},{j}) sum is not an integer: {total}")
    return int(total)


def s_sum(m: int, j: int) -> int:
    """The completed alternating sum, scaled by ``2j + 1``; it vanishes identically."""
    _check_mj(m, j)
    total = 0
    for t in range(m - j + 1):
        sign = -1 if t % 2 else 1
        total += sign * comb(2 * m + 1, m - j - t) * (2 * (j + t) + 1) * comb(2 * j + t, t)
    return total


# -- polynomial and roots -----------------------------------------------------


def build_polynomial(params: CardanoParams) -> Polynomial:
    n, m, c = params.n, params.m, params.c
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[n] = 1.0
    coeffs[0] = -2.0 * params.d
    for j in range(m):
        coeffs[2 * j + 1] = -b_coeff(m, j) * c ** (m - j)
    return Polynomial(coeffs)


def real_root(v: float, n: int) -> float:
    """Real n-th root for odd n, sign preserving."""
    return math.copysign(abs(v) ** (1.0 / n), v)


def compute_pq(params: CardanoParams) -> PQPair:
    n, c, d = params.n, params.c, params.d
    if params.discriminant_is_negative():
        # c > 0 here because c**n > d**2 >= 0
        alpha = math.acos(max(-1.0, min(1.0, d / c ** (n / 2))))
        p = math.sqrt(c) * cmath.exp(1j * alpha / n)
        return PQPair(p=p, q=p.conjugate(), form=PQForm.CONJUGATE_PAIR, alpha=alpha)
    if params.discriminant_is_zero():
        # repeated roots; pq = c only holds approximately here
        p = real_root(d, n)
        return PQPair(p=complex(p), q=complex(p), form=PQForm.REAL_RADICAL)
    sq = math.sqrt(params.D)
    plus, minus = d + sq, d - sq
    # take the radicand without cancellation and recover the partner from pq = c
    if abs(plus) >= abs(minus):
        p = real_root(plus, n)
        q = c / p if p != 0 else real_root(minus, n)
    else:
        q = real_root(minus, n)
        p = c / q if q != 0 else real_root(plus, n)
    return PQPair(p=complex(p), q=complex(q), form=PQForm.REAL_RADICAL)


def branch_order(n: int) -> list[int]:
    """Branch indices 0, +1, -1, +2, -2, ... covering all n residues."""
    out = [0]
    for k in range(1, (n - 1) // 2 + 1):
        out.extend((k, -k))
    return out


def _branch_values(params: CardanoParams, pq: PQPair, js) -> np.ndarray:
    js = np.asarray(js)
    n = params.n
    if pq.form is PQForm.CONJUGATE_PAIR:
        vals = 2 * math.sqrt(params.c) * np.cos((pq.alpha + 2 * math.pi * js) / n)
        return vals.astype(complex)
    w = np.exp(2j * math.pi * (js % n) / n)
    return pq.p * w + pq.q * w.conjugate()


def closed_form_roots(params: CardanoParams) -> np.ndarray:
    """All n roots, ordered by branch index 0, +1, -1, +2, -2, ..."""
    pq = compute_pq(params)
    if pq.form is PQForm.CONJUGATE_PAIR:
        return trig_roots(params)
    return _branch_values(params, pq, branch_order(params.n))


def trig_roots(params: CardanoParams) -> np.ndarray:
    """Real roots ``2 sqrt(c) cos((alpha + 2 pi j) / n)`` for D < 0."""
    if not params.discriminant_is_negative():
        raise DomainError(f"trig_roots requires D < 0, got D = {params.D}")
    pq = compute_pq(params)
    return _branch_values(params, pq, branch_order(params.n))


def branch_roots(params: CardanoParams, k: int) -> np.ndarray:
    """Roots listed with every branch index shifted by ``k``."""
    pq = compute_pq(params)
    return _branch_values(params, pq, [j + k for j in branch_order(params.n)])


def recognize(p: Polynomial, tol: float = 1e-9) -> Optional[CardanoParams]:
    """Return (n, c, d) if ``p`` is a generalized Cardano polynomial, else None.

    Non-monic input is normalized by its leading coefficient first.
    """
    n = p.degree
    if n < 3 or n % 2 == 0:
        return None
    q = p.monic()
    if not q.is_real(tol * (1 + q.max_abs_coeff())):
        return None
    a = q.coeffs.real
    params = CardanoParams(n, -a[n - 2] / n, -a[0] / 2)
    rebuilt = build_polynomial(params).coeffs.real
    scale = 1 + np.max(np.abs(a))
    if np.all(np.abs(rebuilt - a) <= tol * scale):
        return params
    return None


def solve_general_cubic(a: float, b: float, c: float) -> np.ndarray:
    """Roots of ``x**3 + a x**2 + b x + c`` through the depressed Cardano form."""
    dep = DepressedCubic.from_monic(a, b, c)
    return closed_form_roots(dep.to_params()) - dep.shift
