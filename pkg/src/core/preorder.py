"""
Specialization preorders and the finite Alexandrov correspondence.

Convention: x <= y iff x ∈ cl{y}, equivalently y ∈ M_x. A set U is open in
topology_from_preorder(P) iff it is up-closed: x ∈ U and x <= y imply y ∈ U.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .errors import LcTopoError, RelationNotReflexive, RelationNotTransitive
from .ground import GroundSet
from .topology import Topology, topology_from_neighborhoods

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Preorder:
    """
    Reflexive, transitive relation on a ground set.

    leq is a read-only boolean n x n matrix; leq[i, j] is True iff i <= j.
    """

    ground: GroundSet
    leq: np.ndarray

    def __post_init__(self):
        n = self.ground.size
        matrix = np.array(self.leq, dtype=bool).reshape((n, n))
        matrix.flags.writeable = False
        object.__setattr__(self, "leq", matrix)

        diagonal = np.diag(matrix)
        if not diagonal.all():
            raise RelationNotReflexive(self.ground.label(int(np.argmin(diagonal))))

        # composition must stay inside the relation
        through = matrix.astype(np.int64) @ matrix.astype(np.int64) > 0
        escaped = through & ~matrix
        if escaped.any():
            x, z = (int(i) for i in np.argwhere(escaped)[0])
            y = int(np.argmax(matrix[x] & matrix[:, z]))
            labels = self.ground.labels
            raise RelationNotTransitive((labels[x], labels[y], labels[z]))

    @classmethod
    def from_pairs(cls, ground: GroundSet, pairs: Sequence[Tuple[str, str]],
                   reflexive: bool = True) -> "Preorder":
        """Build from (x, y) pairs meaning x <= y; optionally adds the diagonal."""
        n = ground.size
        matrix = np.eye(n, dtype=bool) if reflexive else np.zeros((n, n), dtype=bool)
        for x, y in pairs:
            matrix[ground.index(x), ground.index(y)] = True
        return cls(ground, matrix)

    @property
    def size(self) -> int:
        return self.ground.size

    def up_rows(self) -> List[int]:
        """Row x as a bit mask of {y : x <= y}."""
        rows = []
        for x in range(self.size):
            mask = 0
            for y in np.flatnonzero(self.leq[x]):
                mask |= 1 << int(y)
            rows.append(mask)
        return rows

    def pairs(self) -> List[Tuple[str, str]]:
        labels = self.ground.labels
        return [(labels[int(x)], labels[int(y)]) for x, y in np.argwhere(self.leq)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Preorder):
            return NotImplemented
        return self.ground == other.ground and np.array_equal(self.leq, other.leq)

    def __hash__(self) -> int:
        return hash((self.ground, self.leq.tobytes()))


def specialization_preorder(space: Topology) -> Preorder:
    """x <= y iff x ∈ cl{y}; rows are read off the minimal neighbourhoods."""
    n = space.size
    matrix = np.zeros((n, n), dtype=bool)
    for x, row in enumerate(space.minimal_neighborhoods):
        for y in range(n):
            if row >> y & 1:
                matrix[x, y] = True
    return Preorder(space.ground, matrix)


def topology_from_preorder(preorder: Preorder) -> Topology:
    """Alexandrov topology of up-closed sets."""
    if not isinstance(preorder, Preorder):
        raise LcTopoError("expected a Preorder")
    return topology_from_neighborhoods(preorder.ground, preorder.up_rows())
