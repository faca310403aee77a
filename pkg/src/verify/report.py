"""
Report records emitted by verification, search and measurement runs.

Witnesses always carry spaces in canonical form, with subsets and map
assignments translated to the canonical labels.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..core import Topology, parse_space
from ..enumeration import canonical_form
from ..maps import FiniteMap


@dataclass(frozen=True)
class Witness:
    """Spaces plus auxiliary data (subsets, point, map) and the clause they exhibit."""
    spaces: Tuple[Topology, ...]
    clause: str
    subsets: Tuple[Tuple[str, ...], ...] = ()
    point: Optional[str] = None
    assignment: Optional[Dict[str, str]] = None

    def subset_masks(self, index: int = 0) -> List[int]:
        """Subsets as masks of the space at the given index."""
        ground = self.spaces[index].ground
        return [ground.mask_of(labels) for labels in self.subsets]

    def finite_map(self) -> FiniteMap:
        return FiniteMap.from_labels(self.spaces[0], self.spaces[1], self.assignment)

    def to_dict(self) -> dict:
        data = {"spaces": [space.to_dict() for space in self.spaces]}
        if self.subsets:
            data["subsets"] = [list(labels) for labels in self.subsets]
        if self.point is not None:
            data["point"] = self.point
        if self.assignment is not None:
            data["map"] = dict(self.assignment)
        data["clause"] = self.clause
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "Witness":
        return cls(
            spaces=tuple(parse_space(space) for space in data["spaces"]),
            clause=data["clause"],
            subsets=tuple(tuple(labels) for labels in data.get("subsets", [])),
            point=data.get("point"),
            assignment=data.get("map"),
        )


def _translate(space: Topology, relabeling: Dict[str, str], canonical: Topology, mask: int) -> Tuple[str, ...]:
    labels = [relabeling[label] for label in space.ground.labels_of(mask)]
    return tuple(canonical.ground.labels_of(canonical.ground.mask_of(labels)))


def space_witness(space: Topology, clause: str, subsets: Sequence[int] = (),
                  point: Optional[int] = None) -> Witness:
    """Witness on one space; subsets and point are given in the space's own indexing."""
    canonical, relabeling = canonical_form(space)
    return Witness(
        spaces=(canonical,),
        clause=clause,
        subsets=tuple(_translate(space, relabeling, canonical, mask) for mask in subsets),
        point=None if point is None else relabeling[space.labels[point]],
    )


def pair_witness(left: Topology, right: Topology, clause: str) -> Witness:
    return Witness(spaces=(canonical_form(left)[0], canonical_form(right)[0]), clause=clause)


def map_witness(f: FiniteMap, clause: str, subsets: Sequence[int] = ()) -> Witness:
    """Witness on a map; subsets are masks of the source space."""
    source, source_relabel = canonical_form(f.source)
    target, target_relabel = canonical_form(f.target)
    images = {source_relabel[x]: target_relabel[y] for x, y in f.as_labels().items()}
    return Witness(
        spaces=(source, target),
        clause=clause,
        subsets=tuple(_translate(f.source, source_relabel, source, mask) for mask in subsets),
        assignment={label: images[label] for label in source.labels},
    )


@dataclass
class VerificationReport:
    """Outcome of one exhaustive proposition check."""
    proposition: str
    n: int
    checked: int = 0
    counterexamples: List[Witness] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def verified(self) -> bool:
        return not self.counterexamples

    def to_dict(self, timing: bool = True) -> dict:
        data = {
            "prop": self.proposition,
            "n": self.n,
            "checked": self.checked,
            "counterexamples": [w.to_dict() for w in self.counterexamples],
        }
        if timing:
            data["ms"] = self.elapsed_ms
        return data


@dataclass
class MeasurementReport:
    """Outcome of a measured (never asserted) claim."""
    claim: str
    n: int
    checked: int = 0
    holds: int = 0
    fails: int = 0
    example: Optional[Witness] = None

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "n": self.n,
            "checked": self.checked,
            "holds": self.holds,
            "fails": self.fails,
            "example": self.example.to_dict() if self.example else None,
        }


@dataclass
class SearchOutcome:
    """Result of a witness search: the least witness, or certified absence."""
    query: dict
    n_max: int
    witness: Optional[Witness] = None
    n: Optional[int] = None
    visited: int = 0

    @property
    def found(self) -> bool:
        return self.witness is not None

    def to_dict(self) -> dict:
        return {
            **self.query,
            "n_max": self.n_max,
            "found": self.found,
            "n": self.n,
            "visited": self.visited,
            "witness": self.witness.to_dict() if self.witness else None,
        }
