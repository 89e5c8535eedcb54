"""Clock, shift and Fourier operators, and the matrix form of Cardano's roots.

``W = p Z + q Z^-1`` is diagonal with the Cardano roots as eigenvalues.
Conjugating by the unitary DFT turns it into the circulant
``X = F^+ W F = p X_n + q X_n^-1``, whose first row is ``(0, q, 0, ..., 0, p)``.

Matrices are dense complex ``numpy`` arrays. The DFT convention is
``F[i, j] = w**(i j) / sqrt(n)`` with ``w = exp(2 pi i / n)``; with the
opposite sign the shift and its inverse trade places.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cardano import CardanoParams, build_polynomial, closed_form_roots, compute_pq
from .errors import DomainError
from .ferrari import solve_quartic_depressed
from .poly import Polynomial

MAX_DIM = 64


@dataclass(frozen=True)
class OperatorReport:
    params: CardanoParams
    w_residual: float
    x_residual: float
    scale: float
    circulant_first_row: Optional[np.ndarray]
    spectrum: np.ndarray

    @property
    def identity_residual(self) -> float:
        return max(self.w_residual, self.x_residual)


def _check_dim(n: int) -> None:
    if n < 2:
        raise DomainError(f"dimension must be >= 2, got {n}")
    if n > MAX_DIM:
        raise DomainError(f"dimension {n} exceeds the dense cap of {MAX_DIM}")


def _omega(n: int) -> complex:
    return np.exp(2j * math.pi / n)


def adjoint(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def frobenius(m: np.ndarray) -> float:
    return float(np.linalg.norm(m, "fro"))


def clock(n: int) -> np.ndarray:
    _check_dim(n)
    return np.diag(np.exp(2j * math.pi * np.arange(n) / n))


def shift(n: int) -> np.ndarray:
    """Permutation sending basis vector j to j + 1 (mod n)."""
    _check_dim(n)
    return np.roll(np.eye(n, dtype=complex), 1, axis=0)


def dft(n: int) -> np.ndarray:
    _check_dim(n)
    idx = np.arange(n)
    return np.exp(2j * math.pi * np.outer(idx, idx) / n) / math.sqrt(n)


def fujii_w(params: CardanoParams) -> np.ndarray:
    """Diagonal operator ``p Z + q Z^-1``; entry j is ``p w**j + q w**-j``."""
    _check_dim(params.n)
    pq = compute_pq(params)
    z = clock(params.n)
    return pq.p * z + pq.q * adjoint(z)


def cardano_x(params: CardanoParams) -> np.ndarray:
    f = dft(params.n)
    return adjoint(f) @ fujii_w(params) @ f


def is_circulant(m: np.ndarray, tol: float) -> Optional[np.ndarray]:
    """First row of ``m`` if each row i is that row rolled right by i, else None."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError("is_circulant needs a square matrix")
    row = m[0]
    for i in range(1, m.shape[0]):
        if np.max(np.abs(m[i] - np.roll(row, i))) > tol:
            return None
    return row.copy()


def circulant_spectrum(first_row) -> np.ndarray:
    """Eigenvalues ``sum_b row[b] w**(-j b)`` of the circulant with this first row."""
    row = np.asarray(first_row, dtype=complex)
    n = row.size
    idx = np.arange(n)
    return np.exp(-2j * math.pi * np.outer(idx, idx) / n) @ row


def mat_poly_eval(p: Polynomial, m: np.ndarray) -> np.ndarray:
    """Horner evaluation of ``p`` at a square matrix."""
    m = np.asarray(m, dtype=complex)
    eye = np.eye(m.shape[0], dtype=complex)
    acc = p.coeffs[-1] * eye
    for a in p.coeffs[-2::-1]:
        acc = acc @ m + a * eye
    return acc


def residual_scale(roots, n: int) -> float:
    return (1.0 + float(np.max(np.abs(roots)))) ** n


def verify_cardano_identity(params: CardanoParams, tol: float = 1e-10) -> OperatorReport:
    """Evaluate the Cardano polynomial at W and at X.

    ``tol`` is only used to decide whether X is circulant.
    """
    poly = build_polynomial(params)
    w = fujii_w(params)
    x = cardano_x(params)
    row = is_circulant(x, tol * (1 + float(np.max(np.abs(x)))))
    spectrum = circulant_spectrum(row) if row is not None else np.linalg.eigvals(x)
    return OperatorReport(
        params=params,
        w_residual=frobenius(mat_poly_eval(poly, w)),
        x_residual=frobenius(mat_poly_eval(poly, x)),
        scale=residual_scale(np.diag(w), params.n),
        circulant_first_row=row,
        spectrum=spectrum,
    )


def commutation_check(n: int) -> float:
    """``||Z X - w X Z||_F`` for the clock and shift of dimension n."""
    z, x = clock(n), shift(n)
    return frobenius(z @ x - _omega(n) * x @ z)


def fourier_root_recovery(params: CardanoParams) -> np.ndarray:
    """Roots as the first row of X times ``sqrt(n) F^+``, in basis order j = 0..n-1."""
    n = params.n
    row = cardano_x(params)[0]
    return row @ (math.sqrt(n) * adjoint(dft(n)))


def ferrari_operator_check(a: float, b: float, c: float) -> float:
    """Frobenius residual of ``X^4 + a X^2 + b X + c I`` on the diagonal root operator."""
    sol = solve_quartic_depressed(a, b, c)
    x = np.diag(sol.roots)
    return frobenius(mat_poly_eval(sol.polynomial, x))


