"""
Locally closed sets, their open/closed decompositions, and the refined
topology 𝒯_l generated by all locally closed sets.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from ..core import PointSet, SetLike, Topology, topology_from_neighborhoods
from .criteria import criterion_e

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LcDecomposition:
    """A = open_part ∩ closed_part."""
    open_part: PointSet
    closed_part: PointSet

    def to_dict(self) -> dict:
        return {"open": self.open_part.labels, "closed": self.closed_part.labels}


def is_lc_mask(space: Topology, mask: int) -> bool:
    return criterion_e(space, mask)


def is_locally_closed(space: Topology, subset: SetLike) -> bool:
    """
    Test whether a subset is locally closed.

    Args:
        space: Topology
        subset: PointSet (or mask) of the space

    Returns:
        True iff cl(A) ∖ A is closed
    """
    return criterion_e(space, space.mask(subset))


def lc_decompositions(space: Topology, subset: SetLike) -> List[LcDecomposition]:
    """All pairs (G, F), G open and F closed, with G ∩ F = A, in mask order."""
    mask = space.mask(subset)
    return [
        LcDecomposition(space.point_set(g), space.point_set(f))
        for g in space.opens
        for f in space.closed_sets
        if g & f == mask
    ]


def standard_decomposition(space: Topology, subset: SetLike) -> LcDecomposition:
    """(A ∪ (X ∖ cl A), cl A); a valid decomposition whenever A is locally closed."""
    mask = space.mask(subset)
    closed_hull = space.closure_mask(mask)
    return LcDecomposition(
        space.point_set(mask | (space.full & ~closed_hull)),
        space.point_set(closed_hull),
    )


@lru_cache(maxsize=8192)
def locally_closed_masks(space: Topology) -> Tuple[int, ...]:
    """Masks of all locally closed subsets, sorted."""
    pairs = len(space.opens) * len(space.closed_sets)
    if pairs < 1 << space.size:
        found = {g & f for g in space.opens for f in space.closed_sets}
    else:
        found = {a for a in range(1 << space.size) if criterion_e(space, a)}
    return tuple(sorted(found))


def locally_closed_family(space: Topology) -> List[PointSet]:
    """All locally closed subsets in canonical order."""
    return [space.point_set(a) for a in locally_closed_masks(space)]


@lru_cache(maxsize=8192)
def tl_topology(space: Topology) -> Topology:
    """
    The topology 𝒯_l whose base is the family of locally closed sets.

    The family is closed under finite intersections, so the smallest locally
    closed set around each point is the 𝒯_l minimal neighbourhood of that
    point, and 𝒯_l is generated by these.
    """
    family = locally_closed_masks(space)
    rows = []
    for x in range(space.size):
        row = space.full
        for a in family:
            if a >> x & 1:
                row &= a
        rows.append(row)
    return topology_from_neighborhoods(space.ground, rows)
