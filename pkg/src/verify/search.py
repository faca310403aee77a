"""
Witness search: the smallest finite space (or map) showing that an
implication does not reverse.

Minimality is smallest size first, then least canonical form, then
lexicographically least auxiliary data (subset masks, points, assignments).
"""

import logging
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from ..config import MAP_LEVEL_CAP, SUBSET_LEVEL_CAP
from ..core import SizeCapExceeded, Topology, UnknownKind
from ..enumeration import (
    canonical_key,
    check_enumeration_size,
    enumerate_classes,
    enumerate_labeled,
    topology_from_key,
)
from ..locally_closed import is_lc_mask, locally_closed_masks
from ..maps import (
    FiniteMap,
    enumerate_maps,
    is_closed_map,
    is_continuous,
    is_lc_continuous,
    is_locally_closed_map,
    is_open_map,
)
from ..properties import PropertyId, check_property, resolve_property
from .report import SearchOutcome, Witness, map_witness, space_witness

logger = logging.getLogger(__name__)


def search(require: Sequence[str], forbid: Sequence[str], n_max: int,
           jobs: int = None, progress: bool = None) -> SearchOutcome:
    """
    Find the least space having every required and no forbidden property.

    Visits all labelled spaces of each size from 1 up; once a size has a
    match, the least canonical form among that size's matches is returned.
    When nothing matches up to n_max the outcome certifies absence.

    Minimality is by size first, so locally-indiscrete without submaximal
    is answered by the 2-point indiscrete space, not a 3-point one; forbid
    indiscrete as well to reach the 3-point partition space.

    Raises:
        UnknownProperty, SizeCapExceeded
    """
    required = [resolve_property(name) for name in require]
    forbidden = [resolve_property(name) for name in forbid]
    check_enumeration_size(n_max)
    query = {
        "require": [pid.value for pid in required],
        "forbid": [pid.value for pid in forbidden],
    }
    outcome = SearchOutcome(query=query, n_max=n_max)

    for n in range(1, n_max + 1):
        best = None
        for space in enumerate_labeled(n, jobs=jobs, progress=progress):
            outcome.visited += 1
            if all(check_property(space, pid) for pid in required) and \
                    not any(check_property(space, pid) for pid in forbidden):
                key = canonical_key(space)
                if best is None or key < best:
                    best = key
        if best is not None:
            clause = "has " + ", ".join(query["require"]) if required else "any space"
            if forbidden:
                clause += "; lacks " + ", ".join(query["forbid"])
            outcome.witness = space_witness(topology_from_key(best), clause)
            outcome.n = n
            logger.info(f"Search {query} found a witness at n={n} after {outcome.visited} spaces")
            return outcome

    logger.info(f"Search {query} certified absence up to n={n_max} over {outcome.visited} spaces")
    return outcome


# --- set phenomena -------------------------------------------------------------

SetProbe = Callable[[Topology], Iterator[Tuple[List[int], Optional[int], str]]]


def _union_of_lc_not_lc(space: Topology):
    lc = set(locally_closed_masks(space))
    for a in range(1 << space.size):
        for b in range(1 << space.size):
            if a in lc and b in lc and a | b not in lc:
                yield [a, b], None, "both sets locally closed; union not locally closed"


def _add_cluster_point_not_lc(space: Topology):
    for a in locally_closed_masks(space):
        cluster = space.closure_mask(a) & ~a
        for x in range(space.size):
            if cluster >> x & 1 and not is_lc_mask(space, a | 1 << x):
                yield [a], x, "set locally closed; adding a cluster point breaks it"


def _complement_of_lc_not_lc(space: Topology):
    for a in locally_closed_masks(space):
        if not is_lc_mask(space, space.full & ~a):
            yield [a], None, "set locally closed; complement not locally closed"


def _closure_product_inequality(space: Topology):
    lc = locally_closed_masks(space)
    for a in lc:
        for b in lc:
            if space.closure_mask(a & b) != space.closure_mask(a) & space.closure_mask(b):
                yield [a, b], None, "closure of the intersection differs from intersection of closures"


SET_PHENOMENA: Dict[str, SetProbe] = {
    "union-of-lc-not-lc": _union_of_lc_not_lc,
    "add-cluster-point-not-lc": _add_cluster_point_not_lc,
    "complement-of-lc-not-lc": _complement_of_lc_not_lc,
    "closure-product-inequality": _closure_product_inequality,
}


def search_set_phenomena(kind: str, n_max: int = SUBSET_LEVEL_CAP) -> SearchOutcome:
    """
    Least witness of a set-level phenomenon.

    Args:
        kind: One of SET_PHENOMENA
        n_max: Largest space size to try

    Raises:
        UnknownKind, SizeCapExceeded
    """
    detector = SET_PHENOMENA.get(kind)
    if detector is None:
        raise UnknownKind(kind)
    if n_max > SUBSET_LEVEL_CAP:
        raise SizeCapExceeded("set phenomenon search size", n_max, SUBSET_LEVEL_CAP)
    outcome = SearchOutcome(query={"kind": kind}, n_max=n_max)

    for n in range(1, n_max + 1):
        for space in enumerate_classes(n, jobs=1, progress=False):
            outcome.visited += 1
            for subsets, point, clause in detector(space):
                outcome.witness = space_witness(space, clause, subsets=subsets, point=point)
                outcome.n = n
                logger.info(f"Phenomenon {kind} found at n={n}")
                return outcome

    logger.info(f"Phenomenon {kind} absent up to n={n_max}")
    return outcome


# --- map phenomena -------------------------------------------------------------

MapProbe = Callable[[FiniteMap], Optional[Tuple[List[int], str]]]


def _lc_continuous_not_continuous(f: FiniteMap):
    if is_lc_continuous(f) and not is_continuous(f):
        return [], "lc-continuous but not continuous"
    return None


def _locally_closed_not_open(f: FiniteMap):
    if is_locally_closed_map(f) and not is_open_map(f):
        return [], "locally closed map but not open"
    return None


def _locally_closed_not_closed(f: FiniteMap):
    if is_locally_closed_map(f) and not is_closed_map(f):
        return [], "locally closed map but not closed"
    return None


def _image_of_lc_not_lc(f: FiniteMap):
    for a in locally_closed_masks(f.source):
        if not is_lc_mask(f.target, f.image_mask(a)):
            return [a], "image of a locally closed set is not locally closed"
    return None


def _continuous_image_of_td_not_td(f: FiniteMap):
    if (
        f.is_surjective
        and is_continuous(f)
        and check_property(f.source, PropertyId.TD)
        and not check_property(f.target, PropertyId.TD)
    ):
        return [], "continuous surjection from a TD space onto a non-TD space"
    return None


MAP_PHENOMENA: Dict[str, MapProbe] = {
    "lc-continuous-not-continuous": _lc_continuous_not_continuous,
    "locally-closed-not-open": _locally_closed_not_open,
    "locally-closed-not-closed": _locally_closed_not_closed,
    "image-of-lc-not-lc": _image_of_lc_not_lc,
    "continuous-image-of-td-not-td": _continuous_image_of_td_not_td,
}


def search_map_phenomena(kind: str, n_max: int = MAP_LEVEL_CAP) -> SearchOutcome:
    """
    Least map witness of a map-level phenomenon.

    Pairs of canonical spaces are tried by source size, then source and
    target canonical order, then assignment.

    Raises:
        UnknownKind, SizeCapExceeded
    """
    detector = MAP_PHENOMENA.get(kind)
    if detector is None:
        raise UnknownKind(kind)
    if n_max > MAP_LEVEL_CAP:
        raise SizeCapExceeded("map phenomenon search size", n_max, MAP_LEVEL_CAP)
    outcome = SearchOutcome(query={"kind": kind}, n_max=n_max)

    classes = {n: list(enumerate_classes(n, jobs=1, progress=False)) for n in range(1, n_max + 1)}
    targets = sorted((space for spaces in classes.values() for space in spaces), key=canonical_key)
    for n in range(1, n_max + 1):
        for source in classes[n]:
            for target in targets:
                for f in enumerate_maps(source, target):
                    outcome.visited += 1
                    found = detector(f)
                    if found is not None:
                        subsets, clause = found
                        outcome.witness = map_witness(f, clause, subsets=subsets)
                        outcome.n = n
                        logger.info(f"Map phenomenon {kind} found with a {n}-point source")
                        return outcome

    logger.info(f"Map phenomenon {kind} absent up to n={n_max}")
    return outcome


def list_set_phenomena() -> List[str]:
    return list(SET_PHENOMENA)


def list_map_phenomena() -> List[str]:
    return list(MAP_PHENOMENA)


def replay_search_witness(witness: Witness, require: Sequence[str], forbid: Sequence[str]) -> bool:
    """Whether a search witness really has the required and lacks the forbidden properties."""
    space = witness.spaces[0]
    return all(check_property(space, name) for name in require) and \
        not any(check_property(space, name) for name in forbid)
