"""Dense complex polynomials and an independent Durand-Kerner root oracle.

Coefficients are stored in ascending order: ``coeffs[k]`` multiplies ``x**k``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, NonConvergence

#: relative magnitude below which ``Polynomial.trim`` drops a trailing coefficient
TRIM_RTOL = 1e-14

_EPS = np.finfo(float).eps


def _as_coeffs(values) -> np.ndarray:
    arr = np.array(values, dtype=complex).ravel()
    if arr.size == 0:
        raise DomainError("polynomial needs at least one coefficient")
    if not np.all(np.isfinite(arr)):
        raise DomainError("polynomial coefficients must be finite")
    return _trim(arr, 0.0)


def _trim(arr: np.ndarray, rtol: float) -> np.ndarray:
    scale = np.max(np.abs(arr))
    if scale == 0.0:
        return arr[:1]
    keep = np.nonzero(np.abs(arr) > rtol * scale)[0][-1] + 1
    return arr[:keep]


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Immutable polynomial with complex coefficients in ascending powers."""

    coeffs: np.ndarray = field()

    def __post_init__(self):
        arr = _as_coeffs(self.coeffs)
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    @property
    def leading(self) -> complex:
        return complex(self.coeffs[-1])

    def __call__(self, z):
        return poly_eval(self, z)

    def __len__(self):
        return self.coeffs.size

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return Polynomial(self.coeffs * other)

    __rmul__ = __mul__

    def __add__(self, other):
        return poly_add(self, other)

    def __sub__(self, other):
        return poly_add(self, -1.0 * other)

    def __neg__(self):
        return Polynomial(-self.coeffs)

    def __repr__(self):
        return f"Polynomial({self.coeffs.tolist()!r})"

    def is_real(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.coeffs.imag) <= tol))

    def max_abs_coeff(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def norm1(self) -> float:
        return float(np.sum(np.abs(self.coeffs)))

    def trim(self, rtol: float = TRIM_RTOL) -> "Polynomial":
        """Drop trailing coefficients below ``rtol * max|coeff|``.

        Construction only strips exact zeros: a monic polynomial with large
        lower coefficients must keep its leading 1.
        """
        return Polynomial(_trim(self.coeffs, rtol))

    def monic(self) -> "Polynomial":
        return Polynomial(self.coeffs / self.coeffs[-1])

    def real_coeffs(self) -> list[float]:
        return [float(v) for v in self.coeffs.real]


def poly_eval(p: Polynomial, z):
    """Horner evaluation; ``z`` may be a scalar or an array."""
    acc = _horner(p.coeffs, z)
    if np.ndim(acc) == 0:
        return complex(acc)
    return acc


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    n = max(len(a), len(b))
    out = np.zeros(n, dtype=complex)
    out[: len(a)] += a.coeffs
    out[: len(b)] += b.coeffs
    return Polynomial(out)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return Polynomial(np.convolve(a.coeffs, b.coeffs))


def poly_from_roots(roots: Iterable[complex], leading: complex = 1.0) -> Polynomial:
    """Expand ``leading * prod(x - r)``."""
    roots = list(roots)
    if not roots:
        raise DomainError("poly_from_roots needs at least one root")
    if leading == 0:
        raise DomainError("leading coefficient must be nonzero")
    coeffs = np.array([1.0 + 0j])
    for r in roots:
        # multiply by (x - r), ascending order
        shifted = np.concatenate(([0j], coeffs))
        shifted[:-1] -= r * coeffs
        coeffs = shifted
    return Polynomial(leading * coeffs)


def _seeds(n: int) -> np.ndarray:
    return (0.4 + 0.9j) ** np.arange(n)


def oracle_roots(
    p: Polynomial, max_iter: int = 1000, rtol: float = 1e-10, polish: int = 3
) -> np.ndarray:
    """All complex roots of ``p`` by Durand-Kerner (Weierstrass) iteration.

    Runs independently of every closed-form solver in the package and is
    used to cross-check them. A root is accepted once
    ``|p(r)| <= rtol * ||p||_1`` or once the residual sits at the rounding
    floor of Horner's scheme at ``r``.

    Raises NonConvergence after ``max_iter`` sweeps.
    """
    if p.degree < 1:
        raise DomainError("oracle_roots needs degree >= 1")
    a = p.monic().coeffs
    n = p.degree
    if n == 1:
        return np.array([-a[0]])
    absa = np.abs(a)
    target = rtol * float(np.sum(absa))

    z = _seeds(n).astype(complex)
    step = np.full(n, np.inf)

    def residuals(z):
        val = np.abs(_horner(a, z))
        floor = 16 * n * _EPS * np.abs(_horner(absa, np.abs(z)))
        return val, floor

    def sweep(z):
        # Gauss-Seidel: updated roots are used immediately
        for i in range(n):
            zi = z[i]
            diff = zi - z
            diff[i] = 1.0
            denom = np.prod(diff)
            if denom == 0:
                denom = _EPS
            z[i] = zi - _horner(a, zi) / denom
            step[i] = abs(z[i] - zi)

    for _ in range(max_iter):
        val, floor = residuals(z)
        at_floor = val <= floor
        # multiple roots converge linearly, so keep going until the steps stall
        stalled = step <= 1e-13 * (1 + np.abs(z))
        if np.all(at_floor | (val <= target) & stalled):
            # the rounding floor is reached before full accuracy on large degrees
            for _ in range(polish):
                sweep(z)
            return z
        sweep(z)
    val, floor = residuals(z)
    if np.all((val <= target) | (val <= floor)):
        return z
    raise NonConvergence(f"Durand-Kerner did not converge in {max_iter} iterations")


def _horner(a: np.ndarray, z):
    acc = np.zeros_like(np.asarray(z, dtype=complex)) + a[-1]
    for c in a[-2::-1]:
        acc = acc * z + c
    return acc


def root_multiset_equal(a: Sequence[complex], b: Sequence[complex], tol: float) -> bool:
    """Greedy minimum-distance matching of two root multisets.

    The globally closest remaining pair is matched first; the sets are equal
    when every matched pair lies within ``tol``.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    a = np.asarray(a, dtype=complex).ravel()
    b = np.asarray(b, dtype=complex).ravel()
    if a.size != b.size:
        return False
    if a.size == 0:
        return True
    dist = np.abs(a[:, None] - b[None, :])
    for _ in range(a.size):
        i, j = np.unravel_index(np.argmin(dist), dist.shape)
        if dist[i, j] > tol:
            return False
        dist[i, :] = np.inf
        dist[:, j] = np.inf
    return True


def sort_roots(roots) -> np.ndarray:
    """Lexicographic (re, im) order, used for stable output.

    Keys are rounded so that roundoff-level differences do not reorder roots.
    """
    roots = np.asarray(roots, dtype=complex)
    order = np.lexsort((np.round(roots.imag, 9), np.round(roots.real, 9)))
    return roots[order]
