"""
Elementary set operators on a finite space: closure, interior, boundary,
derived set, minimal neighbourhoods and set classification.
"""

from dataclasses import asdict, dataclass

from .ground import PointSet
from .topology import SetLike, Topology


@dataclass(frozen=True)
class SetClassification:
    """Definitional flags of a subset."""
    open: bool
    closed: bool
    clopen: bool
    dense: bool
    preopen: bool  # A ⊆ int cl A
    regular_open: bool  # A = int cl A

    def to_dict(self) -> dict:
        return asdict(self)


def closure(space: Topology, subset: SetLike) -> PointSet:
    return space.point_set(space.closure_mask(space.mask(subset)))


def interior(space: Topology, subset: SetLike) -> PointSet:
    return space.point_set(space.interior_mask(space.mask(subset)))


def boundary(space: Topology, subset: SetLike) -> PointSet:
    """cl(A) minus int(A)."""
    return space.point_set(space.boundary_mask(space.mask(subset)))


def derived_set(space: Topology, subset: SetLike) -> PointSet:
    """Accumulation points: x such that every open U ∋ x meets A∖{x}."""
    return space.point_set(space.derived_mask(space.mask(subset)))


def minimal_neighborhood(space: Topology, point: str) -> PointSet:
    """M_x, the intersection of all opens containing the point."""
    return space.point_set(space.minimal_neighborhoods[space.ground.index(point)])


def classify_mask(space: Topology, mask: int) -> SetClassification:
    is_open = space.is_open(mask)
    is_closed = space.is_closed(mask)
    closed_hull = space.closure_mask(mask)
    int_cl = space.interior_mask(closed_hull)
    return SetClassification(
        open=is_open,
        closed=is_closed,
        clopen=is_open and is_closed,
        dense=closed_hull == space.full,
        preopen=mask & ~int_cl == 0,
        regular_open=mask == int_cl,
    )


def classify_set(space: Topology, subset: SetLike) -> SetClassification:
    """
    Classify a subset.

    Args:
        space: Topology
        subset: PointSet (or mask) of the space

    Returns:
        SetClassification with open/closed/clopen/dense/preopen/regular_open flags
    """
    return classify_mask(space, space.mask(subset))
