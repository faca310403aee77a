"""
Separation by open sets and by clopen sets.

In a finite space the smallest open set containing S is the union of the
minimal neighbourhoods of its points, so two sets can be put into disjoint
open sets iff their open hulls are disjoint.

A continuous map from a finite space into [0, 1] has a finite, hence
discrete, image; its fibres are clopen. Separating a point from a set by such
a function is therefore the same as separating them by a clopen set.
"""

from typing import Iterable

from ..core import PointSet, SetLike, Topology
from ..locally_closed import locally_closed_masks


def open_separated(space: Topology, left: int, right: int) -> bool:
    """Disjoint opens U ⊇ left, V ⊇ right exist."""
    return space.hull_mask(left) & space.hull_mask(right) == 0


def clopen_separated_mask(space: Topology, point: int, mask: int) -> bool:
    bit = 1 << point
    return any(c & bit and not c & mask for c in space.clopen_sets)


def clopen_separated(space: Topology, point: str, subset: SetLike) -> bool:
    """
    Whether some clopen C contains the point and misses the subset.

    Args:
        space: Topology
        point: Point label
        subset: PointSet (or mask)
    """
    return clopen_separated_mask(space, space.ground.index(point), space.mask(subset))


def _point_set_pairs(space: Topology, family: Iterable[int]):
    for a in family:
        for x in range(space.size):
            if not a >> x & 1:
                yield x, a


def separates_points_from(space: Topology, family: Iterable[int]) -> bool:
    """Every set of family can be separated from every outside point by disjoint opens."""
    return all(open_separated(space, 1 << x, a) for x, a in _point_set_pairs(space, family))


def clopen_separates_points_from(space: Topology, family: Iterable[int]) -> bool:
    return all(clopen_separated_mask(space, x, a) for x, a in _point_set_pairs(space, family))


def separates_disjoint_pairs(space: Topology, family: Iterable[int]) -> bool:
    """Every two disjoint members of family lie in disjoint opens."""
    members = list(family)
    return all(
        open_separated(space, a, b)
        for i, a in enumerate(members)
        for b in members[i:]
        if a & b == 0
    )


def is_regular(space: Topology) -> bool:
    return separates_points_from(space, space.closed_sets)


def is_completely_regular(space: Topology) -> bool:
    return clopen_separates_points_from(space, space.closed_sets)


def is_normal(space: Topology) -> bool:
    return separates_disjoint_pairs(space, space.closed_sets)


def is_lc_regular(space: Topology) -> bool:
    return separates_points_from(space, locally_closed_masks(space))


def is_lc_completely_regular(space: Topology) -> bool:
    return clopen_separates_points_from(space, locally_closed_masks(space))


def is_lc_normal(space: Topology) -> bool:
    return separates_disjoint_pairs(space, locally_closed_masks(space))


def is_discrete_subspace_mask(space: Topology, mask: int) -> bool:
    # a ∈ A is isolated in A iff M_a ∩ A = {a}
    return all(
        space.minimal_neighborhoods[a] & mask == 1 << a
        for a in range(space.size)
        if mask >> a & 1
    )


def is_discrete_subspace(space: Topology, subset: SetLike) -> bool:
    """Whether the subspace topology on the subset is discrete."""
    return is_discrete_subspace_mask(space, space.mask(subset))


def isolated_points(space: Topology) -> PointSet:
    """I(X) = {x : {x} is open}."""
    mask = 0
    for x in range(space.size):
        if space.is_open(1 << x):
            mask |= 1 << x
    return space.point_set(mask)
