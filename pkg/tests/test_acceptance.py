"""Acceptance gate: one test per criterion, each at its stated tolerance.

``conftest.py`` prints a PASS/FAIL line per criterion at the end of the run.
"""
import math
from fractions import Fraction

import numpy as np

from gencardano.cardano import (
    CardanoParams,
    DepressedCubic,
    b_coeff,
    b_coeff_oracle,
    build_polynomial,
    closed_form_roots,
    compute_pq,
    recognize,
    s_sum,
    trig_roots,
)
from gencardano.chebyshev import (
    cardano_from_omega,
    cardano_recurrence_sequence,
    omega_closed,
    omega_recurrence,
)
from gencardano.ferrari import solve_quartic_depressed, solve_quartic_general
from gencardano.operators import (
    commutation_check,
    fourier_root_recovery,
    fujii_w,
    verify_cardano_identity,
)
from gencardano.poly import Polynomial, oracle_roots, poly_add, poly_eval, poly_mul, root_multiset_equal

SQ3 = math.sqrt(3)
PHI = (1 + math.sqrt(5)) / 2


def residuals(poly, roots):
    return np.abs(poly_eval(poly, np.asarray(roots)))


def test_criterion_1_example_cubic():
    """x^3 - 6x - 9: closed-form roots, residual 1e-10, oracle match 1e-9."""
    poly = Polynomial([-9, -6, 0, 1])
    params = recognize(poly)
    assert (params.n, params.c, params.d) == (3, 2, 4.5)
    roots = closed_form_roots(params)
    assert root_multiset_equal(roots, [3, (-3 + 1j * SQ3) / 2, (-3 - 1j * SQ3) / 2], 1e-9)
    assert abs(roots[0] - 3) <= 1e-12
    assert np.all(residuals(poly, roots) <= 1e-10)
    assert root_multiset_equal(roots, oracle_roots(poly), 1e-9)


def test_criterion_2_example_family():
    """(3,1,1) and (5,1,1): exact coefficients, residuals 1e-8, double roots at 1e-6."""
    p3 = build_polynomial(CardanoParams(3, 1, 1))
    assert p3 == Polynomial([-2, -3, 0, 1])
    r3 = closed_form_roots(CardanoParams(3, 1, 1))
    assert np.all(residuals(p3, r3) <= 1e-8)
    assert root_multiset_equal(r3, [2, -1, -1], 1e-6)

    p5 = build_polynomial(CardanoParams(5, 1, 1))
    assert p5 == Polynomial([-2, 5, 0, -5, 0, 1])
    r5 = closed_form_roots(CardanoParams(5, 1, 1))
    assert np.all(residuals(p5, r5) <= 1e-8)
    assert root_multiset_equal(r5, [2, PHI - 1, PHI - 1, -PHI, -PHI], 1e-6)


def test_criterion_3_negative_discriminant_quintic():
    """(5,3,2): D = -239 exactly, x[0] near 3.3215, trig residuals 1e-9."""
    params = CardanoParams(5, 3, 2)
    assert build_polynomial(params) == Polynomial([-4, 45, 0, -15, 0, 1])
    assert params.D == -239
    assert Fraction(2) ** 2 - Fraction(3) ** 5 == -239
    roots = trig_roots(params)
    assert np.all(roots.imag == 0)
    assert abs(roots[0].real - 3.3215) <= 5e-4
    assert np.all(residuals(build_polynomial(params), roots) <= 1e-9)


def test_criterion_4_coefficient_identities():
    """B_{m,j} against the double-sum form and the vanishing sum, in exact integers."""
    cases = 0
    for m in range(1, 21):
        for j in range(m):
            b = b_coeff(m, j)
            assert isinstance(b, int)
            assert b == b_coeff_oracle(m, j)
            assert s_sum(m, j) == 0
            cases += 1
    # every pair with 1 <= m <= 20, 0 <= j <= m - 1
    assert cases == 210


def test_criterion_5_c7_golden():
    """build_polynomial(7, c, d) equals x^7 - 7c x^5 + 14c^2 x^3 - 7c^3 x - 2d."""
    rng = np.random.default_rng(2024)
    for c, d in rng.uniform(-5, 5, (20, 2)):
        c, d = float(c), float(d)
        got = build_polynomial(CardanoParams(7, c, d)).coeffs
        expected = [-2 * d, -7 * c**3, 0, 14 * c**2, 0, -7 * c, 0, 1]
        assert list(got) == expected


def _recurrence_residual(seq, c, d):
    x = Polynomial([0, 1])
    rhs = Polynomial([2 * d * (-c - 1), 2 * d])
    worst = 0.0
    for k in range(len(seq) - 2):
        lhs = poly_add(poly_add(seq[k + 2], -1.0 * poly_mul(x, seq[k + 1])), c * seq[k])
        diff = poly_add(lhs, -1.0 * rhs)
        scale = 1 + max(s.max_abs_coeff() for s in seq[k : k + 3])
        worst = max(worst, diff.norm1() / scale)
    return worst


def test_criterion_6_chebyshev_bridge():
    """Omega constructions agree; Omega route matches build; recurrence residual."""
    for n in range(1, 31):
        assert omega_closed(n).coeffs == omega_recurrence(n).coeffs

    rng = np.random.default_rng(6)
    for _ in range(100):
        n = int(rng.choice(range(3, 22, 2)))
        c = 5.0 - float(rng.uniform(0, 5))  # (0, 5]
        d = float(rng.uniform(-5, 5))
        params = CardanoParams(n, c, d)
        a = cardano_from_omega(params).coeffs
        b = build_polynomial(params).coeffs
        # relative to the coefficient vector; structural zeros must match too
        assert np.max(np.abs(a - b)) <= 1e-9 * np.max(np.abs(b))

    seq = cardano_recurrence_sequence(1.0, 1.0, 4)
    assert seq[0] == Polynomial([-2, 1])
    assert seq[1] == Polynomial([-4, 0, 1])
    for c, d in rng.uniform(-5, 5, (20, 2)):
        seq = cardano_recurrence_sequence(float(c), float(d), 25)
        assert _recurrence_residual(seq, c, d) <= 1e-9
        for n in range(3, 26, 2):
            expected = build_polynomial(CardanoParams(n, float(c), float(d))).coeffs
            got = seq[n - 1].coeffs
            assert np.all(np.abs(got - expected) <= 1e-9 * (1 + np.abs(expected).max()))


def test_criterion_7_ferrari():
    """Worked quartic through its resolvent, then 1000 random quartics against the oracle."""
    sol = solve_quartic_depressed(6, 8, 3)
    assert sol.resolvent == Polynomial([1, -3, -3, 1])
    dep = DepressedCubic.from_monic(-3, -3, 1)
    # z**3 + 3s z + t with 3s = -6, t = -4
    assert (3 * dep.s, dep.t, dep.shift) == (-6, -4, -1)
    params = dep.to_params()
    assert (params.c, params.d) == (2, 2)
    z = trig_roots(params)
    assert abs(z[0].real - (1 + SQ3)) <= 1e-10
    assert len(sol.roots) == 4
    assert np.all(residuals(sol.polynomial, sol.roots) <= 1e-8)

    rng = np.random.default_rng(7)
    for a3, a2, a1, a0 in rng.uniform(-5, 5, (1000, 4)):
        sol = solve_quartic_general(a3, a2, a1, a0)
        assert root_multiset_equal(sol.roots, oracle_roots(sol.polynomial), 1e-6)


def test_criterion_8_operator_suite():
    """Odd n in 3..15 with 50 random (c, d) each."""
    rng = np.random.default_rng(8)
    for n in range(3, 16, 2):
        assert commutation_check(n) <= 1e-12 * n
        for c, d in rng.uniform(-3, 3, (50, 2)):
            params = CardanoParams(n, float(c), float(d))
            rep = verify_cardano_identity(params)
            assert rep.w_residual <= 1e-8 * rep.scale
            assert rep.x_residual <= 1e-8 * rep.scale
            row = rep.circulant_first_row
            assert row is not None
            pq_scale = 1 + abs(row[1]) + abs(row[-1])
            assert np.all(np.abs(row[2:-1]) <= 1e-10 * pq_scale) and abs(row[0]) <= 1e-10 * pq_scale
            pq = compute_pq(params)
            assert abs(row[1] - pq.q) <= 1e-10 * pq_scale
            assert abs(row[-1] - pq.p) <= 1e-10 * pq_scale
            assert root_multiset_equal(rep.spectrum, np.diag(fujii_w(params)), 1e-9)
            assert root_multiset_equal(fourier_root_recovery(params), closed_form_roots(params), 1e-9)


def test_criterion_9_recognition():
    """200 round trips plus the two rejection classes."""
    rng = np.random.default_rng(9)
    for _ in range(200):
        n = int(rng.choice(range(3, 26, 2)))
        c, d = (float(v) for v in rng.uniform(-5, 5, 2))
        got = recognize(build_polynomial(CardanoParams(n, c, d)))
        assert got is not None and got.n == n
        assert abs(got.c - c) <= 1e-9 * (1 + abs(c))
        assert abs(got.d - d) <= 1e-9 * (1 + abs(d))

    assert recognize(Polynomial([1, 1, 0, 0, 0, 1])) is None
    for n in range(3, 26, 2):
        coeffs = build_polynomial(CardanoParams(n, 1.5, -0.5)).coeffs.copy()
        coeffs[n - 1] = 0.25
        assert recognize(Polynomial(coeffs)) is None
