"""Exact tools for the infinity-norm shortest vector problem on lattices
given by integer matrices with bounded full-rank subdeterminants."""

from .errors import (
    BudgetExceededError,
    ContainmentError,
    DeltaSvpError,
    DimensionError,
    DomainError,
    EmptyPolyhedronError,
    InvariantError,
    RankError,
    SingularMatrixError,
    ThresholdError,
    UnboundedPolyhedronError,
    ZeroLatticeError,
)
from .linalg import (
    IntMatrix,
    ScaledInverse,
    adjugate,
    det,
    find_invertible_rows,
    gcd_full_rank_subdets,
    hnf,
    is_totally_delta_modular,
    max_abs_full_rank_subdet,
    rank,
    scaled_inverse,
    subdet_ratio_check,
)
from .oracle import (
    OracleResult,
    brute_force_svp,
    certifies_lower_bound,
    enum_bound,
    shortest_is_at_least_2,
)
from .threshold import (
    Certificate,
    ShortVector,
    SvpOutcome,
    ThresholdState,
    dimension_threshold,
    solve_svp,
    solve_threshold,
    solve_threshold_trace,
    threshold_step,
)
from .generators import (
    complete_digraph_incidence,
    lower_bound_instance,
    random_delta_modular,
    sparsity_instance,
)
from .polyhedra import (
    PolyhedronH,
    StandardFormILP,
    integer_hull_vertices,
    integer_points,
    kernel_lattice_basis,
    min_face_dimension,
    solve_standard_form_ilp,
    verify_face_dimension_bound,
    verify_kernel_identity,
    verify_sparsity_construction,
    verify_support_bound,
    vertices_of_polyhedron,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "Certificate",
    "ContainmentError",
    "DeltaSvpError",
    "DimensionError",
    "DomainError",
    "EmptyPolyhedronError",
    "IntMatrix",
    "InvariantError",
    "OracleResult",
    "PolyhedronH",
    "RankError",
    "ScaledInverse",
    "ShortVector",
    "SingularMatrixError",
    "StandardFormILP",
    "SvpOutcome",
    "ThresholdError",
    "ThresholdState",
    "UnboundedPolyhedronError",
    "ZeroLatticeError",
    "adjugate",
    "brute_force_svp",
    "certifies_lower_bound",
    "complete_digraph_incidence",
    "det",
    "dimension_threshold",
    "enum_bound",
    "find_invertible_rows",
    "gcd_full_rank_subdets",
    "hnf",
    "integer_hull_vertices",
    "integer_points",
    "is_totally_delta_modular",
    "kernel_lattice_basis",
    "lower_bound_instance",
    "max_abs_full_rank_subdet",
    "min_face_dimension",
    "random_delta_modular",
    "rank",
    "scaled_inverse",
    "shortest_is_at_least_2",
    "solve_standard_form_ilp",
    "solve_svp",
    "solve_threshold",
    "solve_threshold_trace",
    "sparsity_instance",
    "subdet_ratio_check",
    "threshold_step",
    "verify_face_dimension_bound",
    "verify_kernel_identity",
    "verify_sparsity_construction",
    "verify_support_bound",
    "vertices_of_polyhedron",
]
