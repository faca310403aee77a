"""
Property registry - one executable predicate per named class of spaces.

Each predicate is evaluated by brute force over its quantifier domain
(subsets, singletons, point/set pairs). Conventions for the empty space:
universally quantified properties hold, Connected and Resolvable fail,
Discrete and Indiscrete hold.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, List, Union

from ..core import Topology, UnknownProperty
from ..locally_closed import is_lc_mask, tl_topology
from .separation import (
    is_completely_regular,
    is_lc_completely_regular,
    is_lc_normal,
    is_lc_regular,
    is_normal,
    is_regular,
)

logger = logging.getLogger(__name__)


class PropertyId(Enum):
    """Stable CLI tokens of the registered properties."""
    T0 = "t0"
    T1 = "t1"
    HAUSDORFF = "hausdorff"
    TD = "td"
    THALF = "thalf"
    SUBMAXIMAL = "submaximal"
    DOOR = "door"
    PRINCIPAL = "principal"
    RESOLVABLE = "resolvable"
    LOCALLY_INDISCRETE = "locally-indiscrete"
    DISCRETE = "discrete"
    INDISCRETE = "indiscrete"
    CONNECTED = "connected"
    EXTREMALLY_DISCONNECTED = "extremally-disconnected"
    REGULAR = "regular"
    COMPLETELY_REGULAR = "completely-regular"
    NORMAL = "normal"
    LC_REGULAR = "lc-regular"
    LC_COMPLETELY_REGULAR = "lc-completely-regular"
    LC_NORMAL = "lc-normal"
    LC_COMPACT = "lc-compact"


@dataclass(frozen=True)
class PropertyDefinition:
    """A registered property and its predicate."""
    property_id: PropertyId
    definition: str
    predicate: Callable[[Topology], bool]


def _singletons(space: Topology):
    return (1 << x for x in range(space.size))


def _all_subsets(space: Topology):
    return range(1 << space.size)


def is_t0(space: Topology) -> bool:
    for x, y in combinations(range(space.size), 2):
        if not any((o >> x & 1) != (o >> y & 1) for o in space.opens):
            return False
    return True


def is_t1(space: Topology) -> bool:
    return all(space.is_closed(s) for s in _singletons(space))


def is_hausdorff(space: Topology) -> bool:
    rows = space.minimal_neighborhoods
    return all(rows[x] & rows[y] == 0 for x, y in combinations(range(space.size), 2))


def is_td(space: Topology) -> bool:
    return all(is_lc_mask(space, s) for s in _singletons(space))


def is_thalf(space: Topology) -> bool:
    return all(space.is_open(s) or space.is_closed(s) for s in _singletons(space))


def is_submaximal(space: Topology) -> bool:
    return all(space.is_open(a) for a in _all_subsets(space) if space.is_dense(a))


def is_door(space: Topology) -> bool:
    return all(space.is_open(a) or space.is_closed(a) for a in _all_subsets(space))


def is_principal(space: Topology) -> bool:
    # Degenerate on finite spaces: every intersection of opens is a finite one.
    return all(a & b in space.open_lookup for a, b in combinations(space.opens, 2))


def is_resolvable(space: Topology) -> bool:
    # Two disjoint dense sets exist iff some dense A has a dense complement.
    if space.size == 0:
        return False
    return any(
        space.is_dense(a) and space.is_dense(space.full & ~a)
        for a in _all_subsets(space)
    )


def is_locally_indiscrete(space: Topology) -> bool:
    return all(space.is_closed(o) for o in space.opens)


def is_discrete(space: Topology) -> bool:
    return all(space.is_open(s) for s in _singletons(space))


def is_indiscrete(space: Topology) -> bool:
    return all(o in (0, space.full) for o in space.opens)


def is_connected(space: Topology) -> bool:
    if space.size == 0:
        return False
    return all(c in (0, space.full) for c in space.clopen_sets)


def is_extremally_disconnected(space: Topology) -> bool:
    return all(space.is_open(space.closure_mask(o)) for o in space.opens)


def is_compact(space: Topology) -> bool:
    # A finite space has finitely many opens; any open cover is finite already.
    return space.hull_mask(space.full) == space.full


def is_lc_compact(space: Topology) -> bool:
    return is_compact(tl_topology(space))


PROPERTY_REGISTRY: Dict[PropertyId, PropertyDefinition] = {
    definition.property_id: definition
    for definition in [
        PropertyDefinition(PropertyId.T0, "distinct points are distinguished by some open set", is_t0),
        PropertyDefinition(PropertyId.T1, "every singleton is closed", is_t1),
        PropertyDefinition(PropertyId.HAUSDORFF, "distinct points lie in disjoint open sets", is_hausdorff),
        PropertyDefinition(PropertyId.TD, "every singleton is locally closed", is_td),
        PropertyDefinition(PropertyId.THALF, "every singleton is open or closed", is_thalf),
        PropertyDefinition(PropertyId.SUBMAXIMAL, "every dense subset is open", is_submaximal),
        PropertyDefinition(PropertyId.DOOR, "every subset is open or closed", is_door),
        PropertyDefinition(PropertyId.PRINCIPAL, "every intersection of open sets is open", is_principal),
        PropertyDefinition(PropertyId.RESOLVABLE, "there are two disjoint dense subsets", is_resolvable),
        PropertyDefinition(PropertyId.LOCALLY_INDISCRETE, "every open set is closed", is_locally_indiscrete),
        PropertyDefinition(PropertyId.DISCRETE, "every subset is open", is_discrete),
        PropertyDefinition(PropertyId.INDISCRETE, "the only open sets are the empty set and the space", is_indiscrete),
        PropertyDefinition(PropertyId.CONNECTED, "nonempty, and the only clopen sets are trivial", is_connected),
        PropertyDefinition(PropertyId.EXTREMALLY_DISCONNECTED, "the closure of every open set is open",
                           is_extremally_disconnected),
        PropertyDefinition(PropertyId.REGULAR, "points and closed sets not containing them lie in disjoint opens",
                           is_regular),
        PropertyDefinition(PropertyId.COMPLETELY_REGULAR,
                           "points and closed sets not containing them are separated by a continuous function",
                           is_completely_regular),
        PropertyDefinition(PropertyId.NORMAL, "disjoint closed sets lie in disjoint opens", is_normal),
        PropertyDefinition(PropertyId.LC_REGULAR,
                           "points and locally closed sets not containing them lie in disjoint opens",
                           is_lc_regular),
        PropertyDefinition(PropertyId.LC_COMPLETELY_REGULAR,
                           "points and locally closed sets not containing them are separated by a continuous function",
                           is_lc_completely_regular),
        PropertyDefinition(PropertyId.LC_NORMAL, "disjoint locally closed sets lie in disjoint opens", is_lc_normal),
        PropertyDefinition(PropertyId.LC_COMPACT, "every cover by locally closed sets has a finite subcover",
                           is_lc_compact),
    ]
}


def resolve_property(name: Union[PropertyId, str]) -> PropertyId:
    if isinstance(name, PropertyId):
        return name
    try:
        return PropertyId(name)
    except ValueError:
        raise UnknownProperty(str(name)) from None


def list_properties() -> List[PropertyId]:
    return list(PropertyId)


@lru_cache(maxsize=65536)
def _evaluate(space: Topology, property_id: PropertyId) -> bool:
    return PROPERTY_REGISTRY[property_id].predicate(space)


def check_property(space: Topology, name: Union[PropertyId, str]) -> bool:
    """
    Evaluate a registered property.

    Args:
        space: Topology
        name: PropertyId or its CLI token (e.g. "submaximal")

    Returns:
        The property's truth value

    Raises:
        UnknownProperty
    """
    return _evaluate(space, resolve_property(name))


def property_profile(space: Topology) -> Dict[str, bool]:
    """All registered properties, keyed by token, in registry order."""
    return {pid.value: check_property(space, pid) for pid in PropertyId}
