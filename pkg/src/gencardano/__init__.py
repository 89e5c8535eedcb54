"""Generalized Cardano polynomials: construction, closed-form roots and operator checks."""

from .cardano import (
    CardanoParams,
    DepressedCubic,
    PQForm,
    PQPair,
    b_coeff,
    b_coeff_oracle,
    branch_roots,
    build_polynomial,
    closed_form_roots,
    compute_pq,
    recognize,
    s_sum,
    solve_general_cubic,
    trig_roots,
)
from .chebyshev import (
    OmegaPoly,
    cardano_from_omega,
    cardano_recurrence_sequence,
    chebyshev_t_check,
    omega_closed,
    omega_recurrence,
)
from .errors import CardanoError, DomainError, InconsistentInput, NonConvergence
from .ferrari import (
    FerrariAux,
    QuarticSolution,
    resolvent_cubic,
    solve_quartic_depressed,
    solve_quartic_general,
)
from .operators import (
    OperatorReport,
    cardano_x,
    clock,
    commutation_check,
    dft,
    ferrari_operator_check,
    fourier_root_recovery,
    fujii_w,
    is_circulant,
    mat_poly_eval,
    shift,
    verify_cardano_identity,
)
from .poly import (
    Polynomial,
    oracle_roots,
    poly_eval,
    poly_from_roots,
    poly_mul,
    root_multiset_equal,
)

__version__ = "0.1.0"
