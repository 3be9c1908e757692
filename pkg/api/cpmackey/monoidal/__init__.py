from .adjunction import AdjunctionWitness, adjunction_witness
from .box import (
    box_hom,
    box_hom_right,
    box_product,
    box_symmetry,
    left_unitor,
    right_unitor,
)
from .internal_hom import (
    HomMackGroup,
    InternalHom,
    burnside_internal_hom_iso,
    internal_hom,
    internal_hom_data,
    internal_hom_map,
    internal_hom_map_right,
)

__all__ = [
    "box_product",
    "box_hom",
    "box_hom_right",
    "box_symmetry",
    "left_unitor",
    "right_unitor",
    "internal_hom",
    "internal_hom_data",
    "internal_hom_map",
    "internal_hom_map_right",
    "burnside_internal_hom_iso",
    "InternalHom",
    "HomMackGroup",
    "AdjunctionWitness",
    "adjunction_witness",
]
