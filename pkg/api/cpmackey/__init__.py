from .abgrp import AbHom, FgAbGroup, IntegerMatrix, smith_normal_form
from .exceptions import MackeyError
from .homalg import ext, ext_coh, resolution, tor, tor_coh
from .mackey import (
    CpMackeyFunctor,
    MackeyHom,
    burnside,
    make_canonical,
    render_functor,
    underlying_free,
)
from .monoidal import box_product, internal_hom
from .randgen import RandomSpec, random_mackey_functor

__all__ = [
    "AbHom",
    "FgAbGroup",
    "IntegerMatrix",
    "smith_normal_form",
    "MackeyError",
    "CpMackeyFunctor",
    "MackeyHom",
    "burnside",
    "underlying_free",
    "make_canonical",
    "render_functor",
    "box_product",
    "internal_hom",
    "resolution",
    "ext",
    "tor",
    "ext_coh",
    "tor_coh",
    "RandomSpec",
    "random_mackey_functor",
    "abgrp",
    "mackey",
    "monoidal",
    "homalg",
    "randgen",
]
