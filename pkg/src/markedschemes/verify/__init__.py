"""Independent checks by exact linear algebra, used by the test suite."""

from .linear import (
    DegreeMatrix,
    DirectSumFailure,
    bareiss_rank,
    ideal_degree_span,
    intersect_with_sous_escalier,
    linear_basis_test,
    rref,
    row_space_rank,
    slice_matrix,
    unique_marked_set_solver,
)

__all__ = [
    "DegreeMatrix",
    "DirectSumFailure",
    "bareiss_rank",
    "ideal_degree_span",
    "intersect_with_sous_escalier",
    "linear_basis_test",
    "rref",
    "row_space_rank",
    "slice_matrix",
    "unique_marked_set_solver",
]
