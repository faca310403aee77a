"""
Canonical forms: one labelled representative per homeomorphism class.

Points are first ordered by a homeomorphism-invariant signature; only
relabelings that respect that order are tried, and the one producing the
lexicographically least sorted opens tuple wins. Two spaces are
homeomorphic iff their canonical forms are equal.
"""

import logging
from itertools import permutations, product as cartesian
from typing import Dict, Iterator, List, Tuple

from ..constructions import permute_mask
from ..core import GroundSet, Topology
from ..maps import point_signatures
from .preorders import check_enumeration_size, enumerate_labeled

logger = logging.getLogger(__name__)

CanonicalKey = Tuple[int, Tuple[int, ...]]


def _signature_blocks(space: Topology) -> List[List[int]]:
    signatures = point_signatures(space)
    order = sorted(range(space.size), key=lambda x: (signatures[x], x))
    blocks: List[List[int]] = []
    for x in order:
        if blocks and signatures[blocks[-1][0]] == signatures[x]:
            blocks[-1].append(x)
        else:
            blocks.append([x])
    return blocks


def _admissible_permutations(space: Topology) -> Iterator[Tuple[int, ...]]:
    """Permutations sending each signature block onto its slot of positions."""
    blocks = _signature_blocks(space)
    starts = []
    position = 0
    for block in blocks:
        starts.append(position)
        position += len(block)

    for choice in cartesian(*(permutations(block) for block in blocks)):
        perm = [0] * space.size
        for start, arrangement in zip(starts, choice):
            for offset, x in enumerate(arrangement):
                perm[x] = start + offset
        yield tuple(perm)


def _best_permutation(space: Topology) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    best_opens = None
    best_perm = None
    for perm in _admissible_permutations(space):
        opens = tuple(sorted(permute_mask(o, perm) for o in space.opens))
        if best_opens is None or opens < best_opens:
            best_opens, best_perm = opens, perm
    return best_opens, best_perm


def canonical_key(space: Topology) -> CanonicalKey:
    """Hashable, label-free identifier of the homeomorphism class."""
    opens, _ = _best_permutation(space)
    return space.size, opens


def canonical_form(space: Topology) -> Tuple[Topology, Dict[str, str]]:
    """
    Canonical representative of the homeomorphism class of space.

    Args:
        space: Topology

    Returns:
        (canonical topology on the standard labels a, b, c, ...,
         {original label: canonical label})
    """
    opens, perm = _best_permutation(space)
    ground = GroundSet.standard(space.size)
    relabeling = {space.labels[i]: ground.labels[perm[i]] for i in range(space.size)}
    return Topology(ground, opens), relabeling


def topology_from_key(key: CanonicalKey) -> Topology:
    size, opens = key
    return Topology(GroundSet.standard(size), opens)


def enumerate_classes(n: int, jobs: int = None, progress: bool = None) -> Iterator[Topology]:
    """
    One canonical representative per homeomorphism class on n points,
    in ascending canonical order.

    Raises:
        SizeCapExceeded
    """
    check_enumeration_size(n)
    keys = {canonical_key(space) for space in enumerate_labeled(n, jobs=jobs, progress=progress)}
    logger.info(f"Found {len(keys)} homeomorphism classes on {n} points")
    for key in sorted(keys):
        yield topology_from_key(key)
