"""
Finite maps between spaces and their classification.
"""

import logging
from dataclasses import asdict, dataclass
from functools import cached_property
from itertools import product as cartesian
from typing import Dict, Iterator, Tuple

from ..config import MAP_ENUMERATION_CAP
from ..core import LcTopoError, PointSet, SetLike, SizeCapExceeded, Topology, iter_bits
from ..locally_closed import is_lc_mask, locally_closed_masks

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteMap:
    """
    A point assignment between two spaces.

    assignment[i] is the index in target of the image of source point i.
    """

    source: Topology
    target: Topology
    assignment: Tuple[int, ...]

    def __post_init__(self):
        assignment = tuple(self.assignment)
        object.__setattr__(self, "assignment", assignment)
        if len(assignment) != self.source.size:
            raise LcTopoError(
                f"assignment has {len(assignment)} entries for {self.source.size} source points"
            )
        for value in assignment:
            if not 0 <= value < self.target.size:
                raise LcTopoError(f"assignment value {value} is not a target point")

    @classmethod
    def from_labels(cls, source: Topology, target: Topology, mapping: Dict[str, str]) -> "FiniteMap":
        """Build from a {source label: target label} dict that must be total."""
        for label in mapping:
            source.ground.index(label)
        missing = [label for label in source.labels if label not in mapping]
        if missing:
            raise LcTopoError(f"map is not total: no image for {missing}")
        return cls(source, target, tuple(target.ground.index(mapping[label]) for label in source.labels))

    @classmethod
    def identity(cls, source: Topology, target: Topology) -> "FiniteMap":
        """Identity on labels between two topologies on the same points."""
        return cls.from_labels(source, target, {label: label for label in source.labels})

    def as_labels(self) -> Dict[str, str]:
        return {
            self.source.labels[i]: self.target.labels[j]
            for i, j in enumerate(self.assignment)
        }

    def image_mask(self, mask: int) -> int:
        result = 0
        for i in iter_bits(mask):
            result |= 1 << self.assignment[i]
        return result

    def preimage_mask(self, mask: int) -> int:
        result = 0
        for i, j in enumerate(self.assignment):
            if mask >> j & 1:
                result |= 1 << i
        return result

    @cached_property
    def is_injective(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    @cached_property
    def is_surjective(self) -> bool:
        return set(self.assignment) == set(range(self.target.size))

    def with_source(self, source: Topology) -> "FiniteMap":
        """The same assignment read from another topology on the source points."""
        return FiniteMap(source, self.target, self.assignment)

    def compose(self, after: "FiniteMap") -> "FiniteMap":
        """after ∘ self."""
        return FiniteMap(self.source, after.target, tuple(after.assignment[j] for j in self.assignment))


@dataclass(frozen=True)
class MapClassification:
    continuous: bool
    lc_continuous: bool
    open_map: bool
    closed_map: bool
    locally_closed_map: bool
    injective: bool
    surjective: bool
    homeomorphism: bool

    def to_dict(self) -> dict:
        return asdict(self)


def image(f: FiniteMap, subset: SetLike) -> PointSet:
    return f.target.point_set(f.image_mask(f.source.mask(subset)))


def preimage(f: FiniteMap, subset: SetLike) -> PointSet:
    return f.source.point_set(f.preimage_mask(f.target.mask(subset)))


def is_continuous(f: FiniteMap) -> bool:
    return all(f.source.is_open(f.preimage_mask(o)) for o in f.target.opens)


def is_lc_continuous(f: FiniteMap) -> bool:
    return all(is_lc_mask(f.source, f.preimage_mask(o)) for o in f.target.opens)


def is_open_map(f: FiniteMap) -> bool:
    return all(f.target.is_open(f.image_mask(o)) for o in f.source.opens)


def is_closed_map(f: FiniteMap) -> bool:
    return all(f.target.is_closed(f.image_mask(c)) for c in f.source.closed_sets)


def is_locally_closed_map(f: FiniteMap) -> bool:
    return all(is_lc_mask(f.target, f.image_mask(a)) for a in locally_closed_masks(f.source))


def classify_map(f: FiniteMap) -> MapClassification:
    """
    Classify a finite map.

    Args:
        f: FiniteMap

    Returns:
        MapClassification; homeomorphism means bijective, continuous and open
    """
    continuous = is_continuous(f)
    open_map = is_open_map(f)
    bijective = f.is_injective and f.is_surjective
    return MapClassification(
        continuous=continuous,
        lc_continuous=is_lc_continuous(f),
        open_map=open_map,
        closed_map=is_closed_map(f),
        locally_closed_map=is_locally_closed_map(f),
        injective=f.is_injective,
        surjective=f.is_surjective,
        homeomorphism=bijective and continuous and open_map,
    )


def enumerate_maps(source: Topology, target: Topology) -> Iterator[FiniteMap]:
    """All |target|^|source| maps, assignments in lexicographic order."""
    for space in (source, target):
        if space.size > MAP_ENUMERATION_CAP:
            raise SizeCapExceeded("map enumeration side", space.size, MAP_ENUMERATION_CAP)
    for assignment in cartesian(range(target.size), repeat=source.size):
        yield FiniteMap(source, target, assignment)
