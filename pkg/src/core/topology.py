"""
Finite topologies stored as sorted tuples of open-set bit vectors.

Every finite topology is principal, so each point x has a minimal open
neighbourhood M_x and every open set is a union of these. Most operators
below are computed from the M_x rows rather than by scanning the opens.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, List, Sequence, Tuple, Union

from .errors import (
    ForeignPoint,
    MissingEmpty,
    MissingWhole,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
)
from .ground import GroundSet, PointSet, iter_bits

logger = logging.getLogger(__name__)

SetLike = Union[PointSet, int]


def unions_of(basis: Iterable[int]) -> Tuple[int, ...]:
    """All unions of members of basis (the empty union included), sorted."""
    opens = {0}
    for member in sorted(set(basis)):
        opens |= {o | member for o in opens}
    return tuple(sorted(opens))


@dataclass(frozen=True)
class Topology:
    """
    A validated topology on a labelled finite ground set.

    Build instances through validate_topology or the other constructors;
    the initializer trusts that opens is sorted, duplicate-free and closed
    under union and intersection.
    """

    ground: GroundSet
    opens: Tuple[int, ...]

    @property
    def size(self) -> int:
        return self.ground.size

    @property
    def full(self) -> int:
        return self.ground.full_mask

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.ground.labels

    @cached_property
    def open_lookup(self) -> FrozenSet[int]:
        return frozenset(self.opens)

    @cached_property
    def closed_sets(self) -> Tuple[int, ...]:
        return tuple(sorted(self.full & ~o for o in self.opens))

    @cached_property
    def closed_lookup(self) -> FrozenSet[int]:
        return frozenset(self.closed_sets)

    @cached_property
    def clopen_sets(self) -> Tuple[int, ...]:
        return tuple(o for o in self.opens if o in self.closed_lookup)

    @cached_property
    def minimal_neighborhoods(self) -> Tuple[int, ...]:
        """M_x for every point x: the intersection of all opens containing x."""
        rows = []
        for x in range(self.size):
            bit = 1 << x
            row = self.full
            for o in self.opens:
                if o & bit:
                    row &= o
            rows.append(row)
        return tuple(rows)

    @cached_property
    def point_closures(self) -> Tuple[int, ...]:
        """cl{x} for every point x."""
        return tuple(self.closure_mask(1 << x) for x in range(self.size))

    def is_open(self, mask: int) -> bool:
        return mask in self.open_lookup

    def is_closed(self, mask: int) -> bool:
        return mask in self.closed_lookup

    def is_clopen(self, mask: int) -> bool:
        return mask in self.open_lookup and mask in self.closed_lookup

    def closure_mask(self, mask: int) -> int:
        # x is in cl(A) iff every open around x meets A iff M_x meets A
        result = 0
        for x, row in enumerate(self.minimal_neighborhoods):
            if row & mask:
                result |= 1 << x
        return result

    def interior_mask(self, mask: int) -> int:
        result = 0
        for x in iter_bits(mask):
            row = self.minimal_neighborhoods[x]
            if row & ~mask == 0:
                result |= row
        return result

    def hull_mask(self, mask: int) -> int:
        """The smallest open set containing mask."""
        result = 0
        for x in iter_bits(mask):
            result |= self.minimal_neighborhoods[x]
        return result

    def boundary_mask(self, mask: int) -> int:
        return self.closure_mask(mask) & ~self.interior_mask(mask)

    def derived_mask(self, mask: int) -> int:
        result = 0
        for x, row in enumerate(self.minimal_neighborhoods):
            if row & mask & ~(1 << x):
                result |= 1 << x
        return result

    def is_dense(self, mask: int) -> bool:
        return self.closure_mask(mask) == self.full

    def mask(self, value: SetLike) -> int:
        """Accept a PointSet of this space or a raw mask and return the mask."""
        if isinstance(value, PointSet):
            if value.ground != self.ground:
                raise ForeignPoint(detail="point set belongs to a different ground set")
            return value.bits
        if value & ~self.full:
            raise ForeignPoint(detail=f"mask {value:#x} has bits outside the ground set")
        return value

    def point_set(self, mask: int) -> PointSet:
        return PointSet(self.ground, mask)

    def subset(self, labels: Iterable[str]) -> PointSet:
        return self.ground.point_set(labels)

    def open_sets(self) -> List[PointSet]:
        return [PointSet(self.ground, o) for o in self.opens]

    def to_dict(self) -> dict:
        """Canonical space-file representation."""
        return {
            "points": list(self.labels),
            "opens": [self.ground.labels_of(o) for o in self.opens],
        }

    def __repr__(self) -> str:
        opens = ", ".join("{" + ",".join(self.ground.labels_of(o)) + "}" for o in self.opens)
        return f"Topology(points={list(self.labels)}, opens=[{opens}])"


def validate_topology(ground: GroundSet, family: Sequence[SetLike]) -> Topology:
    """
    Validate a family of subsets and return it as a Topology.

    Args:
        ground: Ground set
        family: Candidate open sets (PointSet values or raw masks); duplicates are merged

    Returns:
        Topology in canonical storage order

    Raises:
        ForeignPoint, MissingEmpty, MissingWhole, NotClosedUnderUnion,
        NotClosedUnderIntersection
    """
    full = ground.full_mask
    masks = set()
    for member in family:
        if isinstance(member, PointSet):
            if member.ground != ground:
                raise ForeignPoint(detail="family member belongs to a different ground set")
            masks.add(member.bits)
        else:
            if member & ~full:
                raise ForeignPoint(detail=f"mask {member:#x} has bits outside the ground set")
            masks.add(member)

    if 0 not in masks:
        raise MissingEmpty()
    if full not in masks:
        raise MissingWhole()

    ordered = sorted(masks)
    for left, right in combinations(ordered, 2):
        if left | right not in masks:
            raise NotClosedUnderUnion((ground.labels_of(left), ground.labels_of(right)))
        if left & right not in masks:
            raise NotClosedUnderIntersection((ground.labels_of(left), ground.labels_of(right)))

    return Topology(ground, tuple(ordered))


def topology_from_neighborhoods(ground: GroundSet, rows: Sequence[int]) -> Topology:
    """Topology whose minimal neighbourhoods are rows (rows[x] must contain x)."""
    return Topology(ground, unions_of(rows))


def generate_from_subbase(ground: GroundSet, family: Sequence[SetLike]) -> Topology:
    """
    Smallest topology containing every member of family.

    Finite intersections of the subbase (X being the empty intersection) form
    a base; the topology is the set of all unions of base members.
    """
    full = ground.full_mask
    base = {full}
    for member in family:
        if isinstance(member, PointSet):
            if member.ground != ground:
                raise ForeignPoint(detail="subbase member belongs to a different ground set")
            base.add(member.bits)
        else:
            if member & ~full:
                raise ForeignPoint(detail=f"mask {member:#x} has bits outside the ground set")
            base.add(member)

    frontier = set(base)
    while frontier:
        fresh = {a & b for a in frontier for b in base} - base
        base |= fresh
        frontier = fresh

    return Topology(ground, unions_of(base))


def discrete(ground: GroundSet) -> Topology:
    return topology_from_neighborhoods(ground, [1 << x for x in range(ground.size)])


def indiscrete(ground: GroundSet) -> Topology:
    return Topology(ground, tuple(sorted({0, ground.full_mask})))
