from .covers import (
    cohomological_cover,
    free_cover,
    hom_from_fixed_element,
    hom_from_fixed_element_coh,
    hom_from_underlying_element,
)
from .derived import (
    ext,
    ext_coh,
    ext_from_resolution,
    ext_series,
    tor,
    tor_coh,
    tor_series,
)
from .resolution import MackeyComplex, homology_at, resolution

__all__ = [
    "hom_from_fixed_element",
    "hom_from_underlying_element",
    "hom_from_fixed_element_coh",
    "free_cover",
    "cohomological_cover",
    "MackeyComplex",
    "resolution",
    "homology_at",
    "ext",
    "tor",
    "ext_coh",
    "tor_coh",
    "ext_series",
    "tor_series",
    "ext_from_resolution",
]
