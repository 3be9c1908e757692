from .groups import (
    AbHom,
    FgAbGroup,
    cokernel_ab,
    compose_ab,
    direct_sum_ab,
    direct_sum_hom,
    identity_hom,
    kernel_ab,
    lift_through_ab,
    make_ab_hom,
    minimal_presentation_ab,
    tensor_ab,
    tensor_hom,
    zero_hom,
)
from .hom_groups import HomGroup, hom_group_ab
from .matrix import IntegerMatrix, block_diagonal, format_matrix
from .smith import (
    SmithDecomposition,
    column_basis,
    integer_nullspace,
    smith_normal_form,
    solve_column,
    solve_columns,
)

__all__ = [
    "IntegerMatrix",
    "block_diagonal",
    "format_matrix",
    "SmithDecomposition",
    "smith_normal_form",
    "solve_column",
    "solve_columns",
    "integer_nullspace",
    "column_basis",
    "FgAbGroup",
    "AbHom",
    "make_ab_hom",
    "compose_ab",
    "zero_hom",
    "identity_hom",
    "kernel_ab",
    "cokernel_ab",
    "direct_sum_ab",
    "direct_sum_hom",
    "tensor_ab",
    "tensor_hom",
    "minimal_presentation_ab",
    "lift_through_ab",
    "HomGroup",
    "hom_group_ab",
]
