"""Exact construction and verification of Leonard pairs, TD pairs and TD-algebra modules over Q."""

from .field import Rat, q_bracket, q_pochhammer, hyp2f1_z2, rat, rat_parse, rat_str
from .linalg import (
    Mat,
    char_poly,
    commutator,
    is_irreducible_tridiagonal,
    mat_mul,
    rational_spectrum,
    solve_linear,
    word_span_dimension,
)
from .relations import (
    DolanGrady,
    Generic,
    ParamSeq,
    ParamSolution,
    QSerre,
    detect_special_case,
    reduce_params,
    solve_param_sequence,
    td_residuals,
    transform_pair,
    transform_params,
)
from .spectral import (
    ClosedForm,
    PairReport,
    adjacency_poly,
    beta_from_sequence,
    fit_closed_form,
    is_arithmetic_progression,
    is_geometric_progression,
    order_eigenvalues,
    params_from_closed_form,
    params_from_sequences,
    verify_td_pair,
)
from .polymod import (
    AWParams,
    LaurentPoly,
    XPoly,
    aw_operator,
    aw_poly,
    aw_recurrence_coeffs,
    derivative,
    graded_td_residual,
    hermite_ops,
    hermite_poly,
    laurent_tau,
    phi43_value,
    symmetric_laurent_to_x,
    tau_conjugation_identity_check,
    truncate_to_matrix,
    x_to_laurent,
)
from .generators import aw_fixture, hermite_fixture, krawtchouk_pair, paper_4x4, uq_sl2_pair

__version__ = "0.1.0"
