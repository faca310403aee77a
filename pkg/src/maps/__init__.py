"""
Maps module: finite maps, their classification and homeomorphism search.
"""

from .finite_map import (
    FiniteMap,
    MapClassification,
    image,
    preimage,
    is_continuous,
    is_lc_continuous,
    is_open_map,
    is_closed_map,
    is_locally_closed_map,
    classify_map,
    enumerate_maps,
)
from .homeomorphism import (
    point_signatures,
    space_invariants,
    signature_preserving_bijections,
    find_homeomorphism,
    are_homeomorphic,
    automorphism_count,
)
from .serialization import MapFile, parse_map, dump_map, load_map

__all__ = [
    "FiniteMap",
    "MapClassification",
    "image",
    "preimage",
    "is_continuous",
    "is_lc_continuous",
    "is_open_map",
    "is_closed_map",
    "is_locally_closed_map",
    "classify_map",
    "enumerate_maps",
    "point_signatures",
    "space_invariants",
    "signature_preserving_bijections",
    "find_homeomorphism",
    "are_homeomorphic",
    "automorphism_count",
    "MapFile",
    "parse_map",
    "dump_map",
    "load_map",
]
