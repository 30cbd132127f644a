"""Mutually unbiased bases for odd prime dimensions, the dual affine plane
incidence geometry underneath them, and exact discrete phase-space mappings."""

from .core import (
    DEFAULT_EPS,
    Modulus,
    approx_eq,
    identity,
    is_hermitian,
    is_prime,
    mat_add,
    mat_adjoint,
    mat_mul,
    mat_scale,
    mat_trace,
    max_abs_diff,
    omega_power,
    zeros,
)
from .errors import (
    ColumnNotNormalizedError,
    DimensionMismatchError,
    IncompleteProbabilitiesError,
    MissingLineError,
    NoCommonPointError,
    NoInverseError,
    NonHermitianInputError,
    NotPrimeError,
    UnsupportedDimensionError,
)
from .geometry import (
    CB_COLUMN,
    ApgPoint,
    Line,
    Point,
    SlopedLine,
    VerticalLine,
    all_lines,
    all_points,
    apg_line_points,
    apg_lines,
    apg_point_to_line,
    apg_points,
    duality_common_point,
    incident,
    line_points,
    line_to_apg_point,
    lines_through_point,
    parallel_class,
    verify_apg_axioms,
    verify_dapg_axioms,
    verify_duality,
)
from .mub import (
    MubFamily,
    basis_matrix,
    mub_family,
    mub_state,
    verify_eigenrelation,
    verify_unbiasedness,
    x_matrix,
    z_matrix,
)
from .operators import (
    gram_point,
    incidence_trace,
    line_index,
    line_operator_direct,
    line_operator_stack,
    line_operator_sum,
    point_index,
    point_operator,
    point_operator_direct,
    point_operator_stack,
    verify_operator_identities,
)
from .phasespace import (
    MubProbabilities,
    QuasiDistribution,
    map_operator,
    marginalize,
    pair_expectation,
    probabilities_from_state,
    quasi_from_probabilities,
    reconstruct,
    validate_density_matrix,
)
from .report import AxiomReport, Check

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_EPS",
    "CB_COLUMN",
    "Modulus",
    "Point",
    "Line",
    "ApgPoint",
    "SlopedLine",
    "VerticalLine",
    "AxiomReport",
    "Check",
    "MubFamily",
    "QuasiDistribution",
    "MubProbabilities",
    "ColumnNotNormalizedError",
    "DimensionMismatchError",
    "IncompleteProbabilitiesError",
    "MissingLineError",
    "NoCommonPointError",
    "NoInverseError",
    "NonHermitianInputError",
    "NotPrimeError",
    "UnsupportedDimensionError",
    "all_lines",
    "all_points",
    "apg_line_points",
    "apg_lines",
    "apg_point_to_line",
    "apg_points",
    "approx_eq",
    "basis_matrix",
    "duality_common_point",
    "gram_point",
    "identity",
    "incidence_trace",
    "incident",
    "is_hermitian",
    "is_prime",
    "line_index",
    "line_operator_direct",
    "line_operator_stack",
    "line_operator_sum",
    "line_points",
    "line_to_apg_point",
    "lines_through_point",
    "map_operator",
    "marginalize",
    "mat_add",
    "mat_adjoint",
    "mat_mul",
    "mat_scale",
    "mat_trace",
    "max_abs_diff",
    "mub_family",
    "mub_state",
    "omega_power",
    "pair_expectation",
    "parallel_class",
    "point_index",
    "point_operator",
    "point_operator_direct",
    "point_operator_stack",
    "probabilities_from_state",
    "quasi_from_probabilities",
    "reconstruct",
    "validate_density_matrix",
    "verify_apg_axioms",
    "verify_dapg_axioms",
    "verify_duality",
    "verify_eigenrelation",
    "verify_operator_identities",
    "verify_unbiasedness",
    "x_matrix",
    "z_matrix",
    "zeros",
]
