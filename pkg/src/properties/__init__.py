"""
Properties module: registered space properties and separation helpers.
"""

from .registry import (
    PropertyId,
    PropertyDefinition,
    PROPERTY_REGISTRY,
    resolve_property,
    list_properties,
    check_property,
    property_profile,
    is_compact,
)
from .separation import (
    open_separated,
    clopen_separated,
    clopen_separated_mask,
    is_discrete_subspace,
    is_discrete_subspace_mask,
    isolated_points,
)

__all__ = [
    "PropertyId",
    "PropertyDefinition",
    "PROPERTY_REGISTRY",
    "resolve_property",
    "list_properties",
    "check_property",
    "property_profile",
    "is_compact",
    "open_separated",
    "clopen_separated",
    "clopen_separated_mask",
    "is_discrete_subspace",
    "is_discrete_subspace_mask",
    "isolated_points",
]
