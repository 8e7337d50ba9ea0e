"""Loewner matrices, operator monotone functions, and operator means.

Numerical machinery for the finite-dimensional theory of operator
monotonicity: divided-difference (Loewner) matrices and their PSD
certificates, the matrix-function chain rule, kernel-measure
representations with a nonnegative-least-squares inverse fitter,
Kubo-Ando connections built from parallel sums, mollifier
regularization, and grid-level concave envelopes with Caratheodory
support reduction.  The `loewnerlab` CLI drives the same code paths.
"""

from ._version import __version__
from .calculus import (
    MatrixPath,
    affine_path,
    apply_function,
    frechet_derivative,
    path_derivative,
    path_second_derivative,
)
from .choquet import (
    BarycenterResult,
    GridFunction,
    caratheodory_decompose,
    concave_envelope,
    is_concave_grid,
    kernel_barycenter_demo,
)
from .connections import (
    ConnectionSpec,
    arithmetic_spec,
    connection_from_function,
    evaluate_connection,
    geometric_mean_closed_form,
    geometric_spec,
    harmonic_spec,
    parallel_sum,
    representing_function,
)
from .divdiff import (
    LoewnerMatrix,
    NodeSet,
    dd1,
    dd2,
    difference_quotient_transform,
    loewner_matrix,
    second_dd_matrix,
)
from .errors import InfeasiblePointError, NumericalFailure, UsageError
from .functions import (
    Mollifier,
    RegularizedSequence,
    ScalarFunction,
    catalog,
    catalog_names,
    get_function,
    mollify,
    mollify_derivative,
    regularize_sequence,
    standard_mollifier,
)
from .hermitian import (
    HermitianMatrix,
    Interval,
    POSITIVE_AXIS,
    eigendecompose,
    identity,
    is_psd,
    loewner_leq,
    random_hermitian,
    random_ordered_pair,
    spectrum_in,
)
from .measures import (
    MeasureInf,
    RadonMeasure01,
    convert_measure,
    default_lambda_grid,
    endpoint_masses,
    fit_measure,
    kernel01,
    kernel_inf,
    synthesize,
)
from .monotonicity import (
    Verdict,
    check_convex_order_n,
    check_midpoint_concavity,
    check_monotone_direct,
    check_monotone_order_n,
    extreme_decomposition,
    transform_involution,
    transform_neg_reciprocal,
    transform_quotient,
)
from .report import CheckRecord, Report, RunConfig
from .acceptance import CRITERIA, run_acceptance

__all__ = [
    "__version__",
    "BarycenterResult",
    "CheckRecord",
    "ConnectionSpec",
    "CRITERIA",
    "GridFunction",
    "HermitianMatrix",
    "InfeasiblePointError",
    "Interval",
    "LoewnerMatrix",
    "MatrixPath",
    "MeasureInf",
    "Mollifier",
    "NodeSet",
    "NumericalFailure",
    "POSITIVE_AXIS",
    "RadonMeasure01",
    "RegularizedSequence",
    "Report",
    "RunConfig",
    "ScalarFunction",
    "UsageError",
    "Verdict",
    "affine_path",
    "apply_function",
    "arithmetic_spec",
    "caratheodory_decompose",
    "catalog",
    "catalog_names",
    "check_convex_order_n",
    "check_midpoint_concavity",
    "check_monotone_direct",
    "check_monotone_order_n",
    "concave_envelope",
    "connection_from_function",
    "convert_measure",
    "dd1",
    "dd2",
    "default_lambda_grid",
    "difference_quotient_transform",
    "eigendecompose",
    "endpoint_masses",
    "evaluate_connection",
    "extreme_decomposition",
    "fit_measure",
    "frechet_derivative",
    "geometric_mean_closed_form",
    "geometric_spec",
    "get_function",
    "harmonic_spec",
    "identity",
    "is_concave_grid",
    "is_psd",
    "kernel01",
    "kernel_barycenter_demo",
    "kernel_inf",
    "loewner_leq",
    "loewner_matrix",
    "mollify",
    "mollify_derivative",
    "parallel_sum",
    "path_derivative",
    "path_second_derivative",
    "random_hermitian",
    "random_ordered_pair",
    "regularize_sequence",
    "representing_function",
    "run_acceptance",
    "second_dd_matrix",
    "spectrum_in",
    "standard_mollifier",
    "synthesize",
    "transform_involution",
    "transform_neg_reciprocal",
    "transform_quotient",
]
