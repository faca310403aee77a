"""
Homeomorphism search with invariant pruning.

Before trying bijections, spaces are compared on cheap invariants; each
candidate bijection must also preserve a per-point signature.
"""

import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..constructions import permute_mask
from ..core import Topology, popcount

logger = logging.getLogger(__name__)

PointSignature = Tuple[int, int, int]


def point_signatures(space: Topology) -> List[PointSignature]:
    """(|M_x|, |cl{x}|, number of opens containing x) for every point."""
    signatures = []
    for x in range(space.size):
        bit = 1 << x
        signatures.append((
            popcount(space.minimal_neighborhoods[x]),
            popcount(space.point_closures[x]),
            sum(1 for o in space.opens if o & bit),
        ))
    return signatures


def space_invariants(space: Topology) -> tuple:
    """Homeomorphism invariants used to rule out pairs before any search."""
    isolated = sum(1 for x in range(space.size) if space.is_open(1 << x))
    return (
        space.size,
        len(space.opens),
        tuple(sorted(popcount(o) for o in space.opens)),
        tuple(sorted(popcount(row) for row in space.minimal_neighborhoods)),
        isolated,
    )


def signature_preserving_bijections(left: Sequence[PointSignature],
                                    right: Sequence[PointSignature]) -> Iterator[Tuple[int, ...]]:
    """Bijections i -> perm[i] with left[i] == right[perm[i]], in lexicographic order."""
    n = len(left)
    perm = [0] * n
    used = [False] * n

    def backtrack(i):
        if i == n:
            yield tuple(perm)
            return
        for j in range(n):
            if not used[j] and left[i] == right[j]:
                used[j] = True
                perm[i] = j
                yield from backtrack(i + 1)
                used[j] = False

    yield from backtrack(0)


def find_homeomorphism(source: Topology, target: Topology) -> Optional[Tuple[int, ...]]:
    """First homeomorphism as an index permutation, or None."""
    if space_invariants(source) != space_invariants(target):
        return None
    target_opens = target.open_lookup
    for perm in signature_preserving_bijections(point_signatures(source), point_signatures(target)):
        if all(permute_mask(o, perm) in target_opens for o in source.opens):
            return perm
    return None


def are_homeomorphic(source: Topology, target: Topology) -> Optional[Dict[str, str]]:
    """
    Search for a homeomorphism.

    Args:
        source: Topology
        target: Topology

    Returns:
        {source label: target label} for the first witness in lexicographic
        order of assignments, or None
    """
    perm = find_homeomorphism(source, target)
    if perm is None:
        return None
    return {source.labels[i]: target.labels[j] for i, j in enumerate(perm)}


def automorphism_count(space: Topology) -> int:
    """Number of self-homeomorphisms."""
    signatures = point_signatures(space)
    opens = space.open_lookup
    return sum(
        1
        for perm in signature_preserving_bijections(signatures, signatures)
        if all(permute_mask(o, perm) in opens for o in space.opens)
    )
