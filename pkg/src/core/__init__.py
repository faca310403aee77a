"""
Core module: ground sets, topologies, elementary operators and the
preorder correspondence.
"""

from .errors import (
    LcTopoError,
    MissingEmpty,
    MissingWhole,
    NotClosedUnderUnion,
    NotClosedUnderIntersection,
    ForeignPoint,
    RelationNotReflexive,
    RelationNotTransitive,
    SizeCapExceeded,
    UnknownProperty,
    UnknownProposition,
    UnknownKind,
    MalformedFile,
)
from .ground import GroundSet, PointSet, iter_bits, popcount, standard_labels
from .topology import (
    SetLike,
    Topology,
    validate_topology,
    generate_from_subbase,
    topology_from_neighborhoods,
    unions_of,
    discrete,
    indiscrete,
)
from .operators import (
    SetClassification,
    closure,
    interior,
    boundary,
    derived_set,
    classify_set,
    classify_mask,
    minimal_neighborhood,
)
from .preorder import Preorder, specialization_preorder, topology_from_preorder
from .serialization import SpaceFile, parse_space, dump_space, load_space, save_space
from .space_library import SpaceLibrary, get_space_library

__all__ = [
    "LcTopoError",
    "MissingEmpty",
    "MissingWhole",
    "NotClosedUnderUnion",
    "NotClosedUnderIntersection",
    "ForeignPoint",
    "RelationNotReflexive",
    "RelationNotTransitive",
    "SizeCapExceeded",
    "UnknownProperty",
    "UnknownProposition",
    "UnknownKind",
    "MalformedFile",
    "GroundSet",
    "PointSet",
    "iter_bits",
    "popcount",
    "standard_labels",
    "Topology",
    "SetLike",
    "validate_topology",
    "generate_from_subbase",
    "topology_from_neighborhoods",
    "unions_of",
    "discrete",
    "indiscrete",
    "SetClassification",
    "closure",
    "interior",
    "boundary",
    "derived_set",
    "classify_set",
    "classify_mask",
    "minimal_neighborhood",
    "Preorder",
    "specialization_preorder",
    "topology_from_preorder",
    "SpaceFile",
    "parse_space",
    "dump_space",
    "load_space",
    "save_space",
    "SpaceLibrary",
    "get_space_library",
]
