"""
=======================================
Product simplicial models and the Moriyama action
=======================================
"""

from .one_complex import OneComplexModel, subdivided_wedge, surface_model, wedge_model
from .product_complex import (
    BASEPOINT_MODE,
    BOUNDARY_MODE,
    SimplicialPairComplex,
    estimate_simplices,
    relative_boundary,
)
from .self_maps import SimplicialSelfMap, collapse_map, endo_to_map
from .moriyama import (
    mor_action,
    mor_rank,
    mor_report,
    pure_arc_basis,
    pushforward_matrix,
)
from .oracle import (
    matches_cell_homology,
    oracle_report,
    relative_homology_oracle,
    surface_oracle,
    wedge_oracle,
)


__all__ = [
    "OneComplexModel",
    "subdivided_wedge",
    "surface_model",
    "wedge_model",
    "BASEPOINT_MODE",
    "BOUNDARY_MODE",
    "SimplicialPairComplex",
    "estimate_simplices",
    "relative_boundary",
    "SimplicialSelfMap",
    "collapse_map",
    "endo_to_map",
    "mor_action",
    "mor_rank",
    "mor_report",
    "pure_arc_basis",
    "pushforward_matrix",
    "relative_homology_oracle",
    "matches_cell_homology",
    "oracle_report",
    "surface_oracle",
    "wedge_oracle",
]
