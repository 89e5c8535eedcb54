"""Quartic equations by Ferrari's reduction to a Cardano resolvent cubic.

The depressed quartic ``x**4 + a x**2 + b x + c`` is written as
``(x**2 + y)**2 - (alpha x + beta)**2``, which factors into
``(x**2 - alpha x + y - beta)(x**2 + alpha x + y + beta)``.
Matching coefficients gives ``alpha**2 = 2y - a``, ``-2 alpha beta = b`` and
``y**2 - beta**2 = c``, so ``y`` is a root of ``4(y**2 - c)(2y - a) - b**2``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .cardano import solve_general_cubic
from .errors import InconsistentInput
from .poly import Polynomial

#: relative threshold on 2y - a below which alpha is treated as zero
ALPHA_ZERO_RTOL = 1e-10


@dataclass(frozen=True)
class FerrariAux:
    y: float
    alpha: float
    beta: float


@dataclass(frozen=True)
class QuarticSolution:
    roots: np.ndarray
    aux: FerrariAux
    resolvent: Polynomial
    polynomial: Polynomial
    biquadratic: bool = False


def resolvent_cubic(a: float, b: float, c: float) -> Polynomial:
    """Monic form of ``4(y**2 - c)(2y - a) - b**2``."""
    # 8y^3 - 4a y^2 - 8c y + (4ac - b^2), divided by 8
    return Polynomial([(4 * a * c - b * b) / 8, -c, -a / 2, 1.0])


def _quadratic_roots(b: complex, c: complex) -> tuple[complex, complex]:
    """Roots of ``x**2 + b x + c`` without cancellation."""
    disc = cmath.sqrt(b * b - 4 * c)
    # pick the sign so that b and disc add constructively
    if (b.conjugate() * disc).real < 0:
        disc = -disc
    big = -(b + disc) / 2
    if big == 0:
        return 0j, 0j
    return big, c / big


def _real_resolvent_root(resolvent: Polynomial) -> float:
    r = resolvent.coeffs.real
    roots = solve_general_cubic(r[2], r[1], r[0])
    re = roots.real
    real_mask = np.abs(roots.imag) <= 1e-9 * (1 + np.abs(re))
    if not np.any(real_mask):
        # a real cubic always has a real root; take the most nearly real one
        real_mask = np.abs(roots.imag) == np.min(np.abs(roots.imag))
    return float(np.max(re[real_mask]))


def _polish_gap(u: float, a: float, b: float, c: float, steps: int = 3) -> float:
    """Newton-refine ``u = 2y - a`` on ``u**3 + 2a u**2 + (a**2 - 4c) u - b**2``.

    This is the resolvent rewritten in ``u``. It has no cancellation near
    small ``u``, so ``u`` (and with it ``beta = -b / (2 sqrt u)``) ends up
    accurate relative to itself rather than to ``a``.
    """
    k1, k0 = a * a - 4 * c, -b * b

    def g(v):
        return ((v + 2 * a) * v + k1) * v + k0

    for _ in range(steps):
        dg = (3 * u + 4 * a) * u + k1
        if dg == 0:
            break
        nxt = u - g(u) / dg
        if not (nxt > 0 and abs(g(nxt)) < abs(g(u))):
            break
        u = nxt
    return u


def solve_quartic_depressed(a: float, b: float, c: float) -> QuarticSolution:
    """Roots of ``x**4 + a x**2 + b x + c``."""
    a, b, c = float(a), float(b), float(c)
    quartic = Polynomial([c, b, a, 0.0, 1.0])
    resolvent = resolvent_cubic(a, b, c)
    y = _real_resolvent_root(resolvent)
    two_y_minus_a = 2 * y - a
    threshold = ALPHA_ZERO_RTOL * (1 + abs(a))

    if two_y_minus_a <= threshold:
        # alpha**2 = 2y - a ~ 0 forces b**2 = 4(y**2 - c)(2y - a) ~ 0
        if abs(b) > math.sqrt(threshold) * (1 + abs(a) + abs(c)):
            raise InconsistentInput(
                f"no resolvent root with 2y - a > 0 although b = {b!r}"
            )
        u1, u2 = _quadratic_roots(complex(a), complex(c))
        s1, s2 = cmath.sqrt(u1), cmath.sqrt(u2)
        roots = np.array([s1, -s1, s2, -s2])
        return QuarticSolution(
            roots=roots,
            aux=FerrariAux(y=y, alpha=0.0, beta=0.0),
            resolvent=resolvent,
            polynomial=quartic,
            biquadratic=True,
        )

    u = _polish_gap(two_y_minus_a, a, b, c)
    y = (u + a) / 2
    alpha = math.sqrt(u)
    beta = -b / (2 * alpha)
    r1 = _quadratic_roots(complex(-alpha), complex(y - beta))
    r2 = _quadratic_roots(complex(alpha), complex(y + beta))
    return QuarticSolution(
        roots=np.array(r1 + r2),
        aux=FerrariAux(y=y, alpha=alpha, beta=beta),
        resolvent=resolvent,
        polynomial=quartic,
    )


def solve_quartic_general(a3: float, a2: float, a1: float, a0: float) -> QuarticSolution:
    """Roots of ``x**4 + a3 x**3 + a2 x**2 + a1 x + a0`` via ``x = z - a3/4``."""
    h = a3 / 4
    a = a2 - 6 * h * h
    b = a1 - 2 * a2 * h + 8 * h ** 3
    c = a0 - a1 * h + a2 * h * h - 3 * h ** 4
    dep = solve_quartic_depressed(a, b, c)
    return QuarticSolution(
        roots=dep.roots - h,
        aux=dep.aux,
        resolvent=dep.resolvent,
        polynomial=Polynomial([a0, a1, a2, a3, 1.0]),
        biquadratic=dep.biquadratic,
    )
