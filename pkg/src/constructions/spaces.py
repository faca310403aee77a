"""
Subspaces, finite products, disjoint sums and relabelings.
"""

import logging
from itertools import product as cartesian
from typing import List, Optional, Sequence, Tuple

from ..config import MAX_GROUND_SIZE
from ..core import (
    GroundSet,
    LcTopoError,
    SetLike,
    SizeCapExceeded,
    Topology,
    iter_bits,
    topology_from_neighborhoods,
)

logger = logging.getLogger(__name__)

PRODUCT_SEPARATOR = "×"


def permute_mask(mask: int, permutation: Sequence[int]) -> int:
    """Move bit i to position permutation[i]."""
    result = 0
    for i in iter_bits(mask):
        result |= 1 << permutation[i]
    return result


def compress_mask(mask: int, positions: Sequence[int]) -> int:
    """Re-index mask onto positions: bit positions[k] becomes bit k."""
    result = 0
    for k, position in enumerate(positions):
        if mask >> position & 1:
            result |= 1 << k
    return result


def relabel(space: Topology, permutation: Sequence[int],
            labels: Optional[Sequence[str]] = None) -> Topology:
    """
    Copy of space in which point i takes position permutation[i].

    Args:
        space: Topology
        permutation: A permutation of range(n)
        labels: Ground labels of the result (defaults to the original labels)
    """
    n = space.size
    if sorted(permutation) != list(range(n)):
        raise LcTopoError(f"invalid permutation {list(permutation)}")
    ground = GroundSet(tuple(labels)) if labels is not None else space.ground
    return Topology(ground, tuple(sorted(permute_mask(o, permutation) for o in space.opens)))


def subspace(space: Topology, subset: SetLike) -> Topology:
    """
    Trace topology on a subset.

    The ground keeps the subset's points in the order they have in space.
    """
    mask = space.mask(subset)
    positions = list(iter_bits(mask))
    ground = GroundSet(tuple(space.labels[p] for p in positions))
    opens = {compress_mask(o & mask, positions) for o in space.opens}
    return Topology(ground, tuple(sorted(opens)))


def _index_tuples(sizes: Sequence[int]) -> List[Tuple[int, ...]]:
    """Points of a product in row-major order (last factor varies fastest)."""
    return list(cartesian(*[range(s) for s in sizes]))


def product(factors: Sequence[Topology]) -> Topology:
    """
    Finite product topology.

    The minimal boxes M_x1 × ... × M_xk form a base; labels are the factor
    labels joined with "×" in factor order.
    """
    if not factors:
        raise LcTopoError("product needs at least one factor")
    sizes = [f.size for f in factors]
    total = 1
    for s in sizes:
        total *= s
    if total > MAX_GROUND_SIZE:
        raise SizeCapExceeded("product", total, MAX_GROUND_SIZE)

    points = _index_tuples(sizes)
    position = {point: i for i, point in enumerate(points)}
    labels = tuple(PRODUCT_SEPARATOR.join(f.labels[c] for f, c in zip(factors, point)) for point in points)

    rows = []
    for point in points:
        box = [list(iter_bits(f.minimal_neighborhoods[c])) for f, c in zip(factors, point)]
        row = 0
        for member in cartesian(*box):
            row |= 1 << position[member]
        rows.append(row)

    result = topology_from_neighborhoods(GroundSet(labels), rows)
    logger.debug(f"Product of {len(factors)} factors: {total} points, {len(result.opens)} opens")
    return result


def projection_assignment(sizes: Sequence[int], factor: int) -> Tuple[int, ...]:
    """Point assignment of the projection from a product onto one factor."""
    return tuple(point[factor] for point in _index_tuples(sizes))


def disjoint_sum(summands: Sequence[Topology]) -> Topology:
    """
    Topological sum: opens are unions of one open from each summand.

    Labels are kept when they are distinct across summands, otherwise every
    label is prefixed with its summand index ("0:a", "1:a", ...).
    """
    if not summands:
        raise LcTopoError("disjoint sum needs at least one summand")
    total = sum(s.size for s in summands)
    if total > MAX_GROUND_SIZE:
        raise SizeCapExceeded("disjoint sum", total, MAX_GROUND_SIZE)

    all_labels = [label for s in summands for label in s.labels]
    if len(set(all_labels)) != len(all_labels):
        all_labels = [f"{i}:{label}" for i, s in enumerate(summands) for label in s.labels]

    rows = []
    offset = 0
    for s in summands:
        rows.extend(row << offset for row in s.minimal_neighborhoods)
        offset += s.size

    return topology_from_neighborhoods(GroundSet(tuple(all_labels)), rows)


def summand_masks(summands: Sequence[Topology]) -> List[int]:
    """Mask of each summand inside the disjoint sum."""
    masks = []
    offset = 0
    for s in summands:
        masks.append(s.full << offset)
        offset += s.size
    return masks
