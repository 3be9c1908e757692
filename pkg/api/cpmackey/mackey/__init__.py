from .abelian import (
    Biproduct,
    Pruned,
    cokernel_mackey,
    copair,
    direct_sum_mackey,
    invariants,
    is_cohomological,
    is_isomorphism_mackey,
    is_zero_hom,
    is_zero_mackey,
    kernel_mackey,
    prune,
    prune_hom,
    prune_mackey,
)
from .constructors import (
    burnside,
    complex_rep,
    fixed_point,
    make_canonical,
    orbit,
    real_rep,
    underlying_free,
    z_underline,
    zero_functor,
    zero_on_underlying,
)
from .functor import (
    CpMackeyFunctor,
    MackeyHom,
    add_mackey,
    compose_mackey,
    identity_mackey,
    mackey_from_matrices,
    make_cp_mackey_functor,
    make_mackey_hom,
    zero_mackey_hom,
)
from .lewis import format_invariants, render_functor, render_hom

__all__ = [
    "CpMackeyFunctor",
    "MackeyHom",
    "make_cp_mackey_functor",
    "mackey_from_matrices",
    "make_mackey_hom",
    "identity_mackey",
    "zero_mackey_hom",
    "compose_mackey",
    "add_mackey",
    "zero_functor",
    "burnside",
    "underlying_free",
    "zero_on_underlying",
    "real_rep",
    "complex_rep",
    "fixed_point",
    "orbit",
    "z_underline",
    "make_canonical",
    "Biproduct",
    "Pruned",
    "direct_sum_mackey",
    "copair",
    "kernel_mackey",
    "cokernel_mackey",
    "prune_mackey",
    "prune",
    "prune_hom",
    "invariants",
    "is_cohomological",
    "is_zero_mackey",
    "is_zero_hom",
    "is_isomorphism_mackey",
    "render_functor",
    "render_hom",
    "format_invariants",
]
