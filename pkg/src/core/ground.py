"""
Ground sets and point sets.

A point set is a bit vector over its ground set: bit i is set when the point
with index i belongs to the set.
"""

import string
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Tuple

from ..config import MAX_GROUND_SIZE
from .errors import ForeignPoint, LcTopoError, SizeCapExceeded


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask in increasing order."""
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def standard_labels(n: int) -> Tuple[str, ...]:
    """Default point names a, b, c, ... used by enumeration and canonical forms."""
    if n <= len(string.ascii_lowercase):
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"p{i}" for i in range(n))


@dataclass(frozen=True)
class GroundSet:
    """Ordered, duplicate-free list of point labels."""

    labels: Tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) > MAX_GROUND_SIZE:
            raise SizeCapExceeded("ground set", len(labels), MAX_GROUND_SIZE)
        if len(set(labels)) != len(labels):
            raise LcTopoError(f"duplicate point labels in {list(labels)}")
        for label in labels:
            if not isinstance(label, str):
                raise LcTopoError(f"point label {label!r} is not a string")

    @classmethod
    def standard(cls, n: int) -> "GroundSet":
        return cls(standard_labels(n))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ForeignPoint(label) from None

    def label(self, index: int) -> str:
        return self.labels[index]

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return mask

    def labels_of(self, mask: int) -> List[str]:
        return [self.labels[i] for i in iter_bits(mask)]

    def point_set(self, labels: Iterable[str]) -> "PointSet":
        return PointSet(self, self.mask_of(labels))

    def from_mask(self, mask: int) -> "PointSet":
        if mask & ~self.full_mask:
            raise ForeignPoint(detail=f"mask {mask:#x} has bits outside a ground set of size {self.size}")
        return PointSet(self, mask)

    def empty(self) -> "PointSet":
        return PointSet(self, 0)

    def whole(self) -> "PointSet":
        return PointSet(self, self.full_mask)

    def subsets(self) -> Iterator[int]:
        """All subset masks in increasing order."""
        return iter(range(1 << self.size))

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class PointSet:
    """A subset of a ground set, stored as a bit vector."""

    ground: GroundSet
    bits: int

    @property
    def labels(self) -> List[str]:
        return self.ground.labels_of(self.bits)

    def _check_owner(self, other: "PointSet"):
        if other.ground != self.ground:
            raise ForeignPoint(detail="point sets belong to different ground sets")

    def union(self, other: "PointSet") -> "PointSet":
        self._check_owner(other)
        return PointSet(self.ground, self.bits | other.bits)

    def intersection(self, other: "PointSet") -> "PointSet":
        self._check_owner(other)
        return PointSet(self.ground, self.bits & other.bits)

    def difference(self, other: "PointSet") -> "PointSet":
        self._check_owner(other)
        return PointSet(self.ground, self.bits & ~other.bits)

    def complement(self) -> "PointSet":
        return PointSet(self.ground, self.ground.full_mask & ~self.bits)

    def issubset(self, other: "PointSet") -> bool:
        self._check_owner(other)
        return self.bits & ~other.bits == 0

    def __contains__(self, label: str) -> bool:
        return bool(self.bits >> self.ground.index(label) & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels) + "}"
