from .random_functors import (
    RandomSpec,
    random_cohomological_functor,
    random_cp_module,
    random_functors,
    random_mackey_functor,
    random_mackey_hom,
    streams,
)

__all__ = [
    "RandomSpec",
    "random_mackey_functor",
    "random_mackey_hom",
    "random_cp_module",
    "random_cohomological_functor",
    "random_functors",
    "streams",
]
