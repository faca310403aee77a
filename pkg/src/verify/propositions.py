"""
Proposition registry.

Each entry binds a claim about finite spaces to an executable check over a
quantifier domain. A check returns None when the instance satisfies the
claim, otherwise a short label-free description of the violated clause.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional

from ..config import MAP_LEVEL_CAP, SPACE_LEVEL_CAP, SUBSET_LEVEL_CAP
from ..constructions import compress_mask, product, projection_assignment, subspace
from ..core import GroundSet, Topology, UnknownProposition, classify_mask, discrete, iter_bits
from ..locally_closed import criteria_agree, is_lc_mask, locally_closed_masks, tl_topology
from ..maps import (
    FiniteMap,
    are_homeomorphic,
    enumerate_maps,
    is_closed_map,
    is_continuous,
    is_lc_continuous,
    is_locally_closed_map,
    is_open_map,
)
from ..properties import PropertyId, check_property, clopen_separated_mask, is_discrete_subspace_mask

logger = logging.getLogger(__name__)

P = PropertyId


class Domain(Enum):
    """Quantifier domain of a proposition."""
    SPACES = "spaces"
    SUBSETS = "space+subset"
    SUBSET_PAIRS = "space+subset-pair"
    MAPS = "space-pair+map"
    SPACE_PAIRS = "space-pair"


DOMAIN_CAPS = {
    Domain.SPACES: SPACE_LEVEL_CAP,
    Domain.SUBSETS: SUBSET_LEVEL_CAP,
    Domain.SUBSET_PAIRS: SUBSET_LEVEL_CAP,
    Domain.MAPS: MAP_LEVEL_CAP,
    Domain.SPACE_PAIRS: MAP_LEVEL_CAP,
}


@dataclass(frozen=True)
class Proposition:
    """A registered claim and its check."""
    proposition_id: str
    title: str
    statement: str
    domain: Domain
    check: Callable[..., Optional[str]]

    @property
    def cap(self) -> int:
        return DOMAIN_CAPS[self.domain]

    def to_dict(self) -> dict:
        return {
            "id": self.proposition_id,
            "title": self.title,
            "statement": self.statement,
            "domain": self.domain.value,
            "cap": self.cap,
        }


def _has(space: Topology, pid: PropertyId) -> bool:
    return check_property(space, pid)


def _is_discrete_topology(space: Topology) -> bool:
    return _has(space, P.DISCRETE)


def _expand_mask(mask: int, positions: List[int]) -> int:
    result = 0
    for k in iter_bits(mask):
        result |= 1 << positions[k]
    return result


def _isolated_mask(space: Topology) -> int:
    mask = 0
    for x in range(space.size):
        if space.is_open(1 << x):
            mask |= 1 << x
    return mask


# --- space + subset(s) -----------------------------------------------------

def check_criteria_agree(space: Topology, a: int) -> Optional[str]:
    if not criteria_agree(space, a):
        return "the seven locally closed criteria disagree"
    return None


def check_dense_lc_open(space: Topology, a: int) -> Optional[str]:
    lc = is_lc_mask(space, a)
    kinds = classify_mask(space, a)
    if lc and kinds.dense and not kinds.open:
        return "dense locally closed set is not open"
    if kinds.preopen and kinds.open != lc:
        return "preopen set: open differs from locally closed"
    if lc and space.is_open(space.closure_mask(a)) and not kinds.open:
        return "locally closed set with open closure is not open"
    if lc:
        traced_dense = any(space.is_dense(a & g) for g in space.opens)
        if kinds.dense != traced_dense:
            return "locally closed set: dense differs from having a dense trace on an open set"
        for b in space.clopen_sets:
            if not is_lc_mask(space, space.closure_mask(a & b)):
                return "closure of a locally closed set cut by a clopen set is not locally closed"
    if _has(space, P.T1) and is_discrete_subspace_mask(space, a) and not lc:
        return "discrete subset of a T1 space is not locally closed"
    return None


def check_lc_intersections(space: Topology, a: int, b: int) -> Optional[str]:
    if a == 0 and b == 0:
        # arbitrary intersections: the smallest locally closed set around each point
        family = locally_closed_masks(space)
        for x in range(space.size):
            meet = space.full
            for member in family:
                if member >> x & 1:
                    meet &= member
            if not is_lc_mask(space, meet):
                return "intersection of a family of locally closed sets is not locally closed"
    if not (is_lc_mask(space, a) and is_lc_mask(space, b)):
        return None
    if not is_lc_mask(space, a & b):
        return "intersection of two locally closed sets is not locally closed"
    separated = any(c & a == a and c & b == 0 for c in space.clopen_sets)
    if separated and not is_lc_mask(space, a | b):
        return "union of two clopen-separated locally closed sets is not locally closed"
    return None


def check_submaximal_closure_meet(space: Topology, a: int, b: int) -> Optional[str]:
    if a & b or not _has(space, P.SUBMAXIMAL):
        return None
    meet = space.closure_mask(a) & space.closure_mask(b)
    if not is_discrete_subspace_mask(space, meet):
        return "closures of disjoint sets meet in a non-discrete subspace"
    return None


def check_submaximal_boundary(space: Topology, a: int) -> Optional[str]:
    if not _has(space, P.SUBMAXIMAL):
        return None
    if not is_discrete_subspace_mask(space, space.boundary_mask(a)):
        return "boundary is not a discrete subspace"
    if is_discrete_subspace_mask(space, a):
        derived = space.derived_mask(a)
        if not is_discrete_subspace_mask(space, space.closure_mask(derived)):
            return "closure of the derived set of a discrete set is not discrete"
        if _has(space, P.T1) and not is_discrete_subspace_mask(space, derived):
            return "derived set of a discrete set in a T1 space is not discrete"
    return None


def check_subspace_behaviour(space: Topology, y: int) -> Optional[str]:
    sub = subspace(space, y)
    positions = list(iter_bits(y))
    if _has(space, P.SUBMAXIMAL) and not _has(sub, P.SUBMAXIMAL):
        return "subspace of a submaximal space is not submaximal"

    traces = {b & y for b in locally_closed_masks(space)}
    for local in range(1 << sub.size):
        if is_lc_mask(sub, local) != (_expand_mask(local, positions) in traces):
            return "locally closed in the subspace differs from being a trace of a locally closed set"

    closure = space.closure_mask(y)
    closure_positions = list(iter_bits(closure))
    in_closure = is_lc_mask(subspace(space, closure), compress_mask(y, closure_positions))
    if in_closure != is_lc_mask(space, y):
        return "locally closed differs from locally closed in the closure"

    isolated = _isolated_mask(space)
    sub_isolated = _expand_mask(_isolated_mask(sub), positions)
    if space.is_open(y) and sub_isolated & ~isolated:
        return "isolated point of an open subspace is not isolated"
    if space.is_dense(y) and isolated & ~sub_isolated:
        return "isolated point is not isolated in a dense subspace"
    return None


def _two_valued_separation(space: Topology, x: int, a: int) -> bool:
    """Some continuous map into the discrete two-point space sends x to 0 and A to 1."""
    two = discrete(GroundSet.standard(2))
    for f in enumerate_maps(space, two):
        if f.assignment[x] != 0:
            continue
        if any(f.assignment[p] != 1 for p in iter_bits(a)):
            continue
        if is_continuous(f):
            return True
    return False


def check_clopen_reduction(space: Topology, a: int) -> Optional[str]:
    if not is_lc_mask(space, a):
        return None
    for x in range(space.size):
        if a >> x & 1:
            continue
        if clopen_separated_mask(space, x, a) != _two_valued_separation(space, x, a):
            return "clopen separation disagrees with two-valued continuous maps"
    return None


# --- spaces ------------------------------------------------------------------

def check_submaximal_all_lc(space: Topology) -> Optional[str]:
    all_lc = len(locally_closed_masks(space)) == 1 << space.size
    if _has(space, P.SUBMAXIMAL) != all_lc:
        return "submaximal differs from every subset locally closed"
    return None


def check_indiscrete_connected(space: Topology) -> Optional[str]:
    if space.size == 0:
        return None
    if _has(space, P.INDISCRETE) != _has(tl_topology(space), P.CONNECTED):
        return "indiscrete differs from connectedness of the refined topology"
    return None


def check_t0_refined(space: Topology) -> Optional[str]:
    if _has(space, P.T0) != _has(tl_topology(space), P.T0):
        return "T0 differs from T0 of the refined topology"
    return None


def check_td_refined(space: Topology) -> Optional[str]:
    refined_discrete = _is_discrete_topology(tl_topology(space))
    if _has(space, P.TD) != refined_discrete:
        return "TD differs from discreteness of the refined topology"
    if _has(space, P.T1) and not refined_discrete:
        return "T1 space with non-discrete refined topology"
    return None


def check_td_t0(space: Topology) -> Optional[str]:
    if _has(space, P.TD) and not _has(space, P.T0):
        return "TD space is not T0"
    if _has(space, P.T0) and not _has(space, P.TD):
        return "T0 space is not TD"
    if not _has(space, P.PRINCIPAL):
        return "finite space is not principal"
    return None


def _every_subset_preopen(space: Topology, masks) -> bool:
    return all(classify_mask(space, m).preopen for m in masks)


def check_locally_indiscrete_equivalents(space: Topology) -> Optional[str]:
    lc = locally_closed_masks(space)
    conditions = {
        "locally indiscrete": _has(space, P.LOCALLY_INDISCRETE),
        "every subset preopen": _every_subset_preopen(space, range(1 << space.size)),
        "every singleton preopen": _every_subset_preopen(space, (1 << x for x in range(space.size))),
        "every closed set preopen": _every_subset_preopen(space, space.closed_sets),
        "every locally closed set open": all(space.is_open(a) for a in lc),
        "every locally closed set closed": all(space.is_closed(a) for a in lc),
        "every locally closed closure open": all(space.is_open(space.closure_mask(a)) for a in lc),
        "every dense open set regular open": all(
            classify_mask(space, o).regular_open for o in space.opens if space.is_dense(o)
        ),
    }
    if len(set(conditions.values())) > 1:
        held = sorted(name for name, value in conditions.items() if value)
        return f"conditions disagree; holding: {', '.join(held)}"
    return None


def check_t1_locally_indiscrete(space: Topology) -> Optional[str]:
    li = _has(space, P.LOCALLY_INDISCRETE)
    if _has(space, P.T1):
        regular = all(classify_mask(space, o).regular_open for o in space.opens)
        if not (_has(space, P.DISCRETE) == li == regular):
            return "T1 space: discrete, locally indiscrete and all-opens-regular disagree"
    if _has(space, P.THALF) and li != _has(space, P.DISCRETE):
        return "T1/2 space: locally indiscrete differs from discrete"
    return None


def check_locally_indiscrete_refined(space: Topology) -> Optional[str]:
    refined = tl_topology(space)
    if _has(space, P.LOCALLY_INDISCRETE) != (refined.opens == space.opens):
        return "locally indiscrete differs from equality with the refined topology"
    if _has(space, P.PRINCIPAL) and not _has(refined, P.PRINCIPAL):
        return "refined topology of a principal space is not principal"
    return None


def check_locally_indiscrete_separation(space: Topology) -> Optional[str]:
    if not _has(space, P.LOCALLY_INDISCRETE):
        return None
    pids = [P.T1, P.THALF, P.TD, P.T0, P.SUBMAXIMAL, P.DISCRETE]
    values = {_has(space, pid) for pid in pids}
    if len(values) > 1:
        return "locally indiscrete space: T1, T1/2, TD, T0, submaximal and discrete disagree"
    return None


def check_locally_indiscrete_extremal(space: Topology) -> Optional[str]:
    if _has(space, P.LOCALLY_INDISCRETE) and not _has(space, P.EXTREMALLY_DISCONNECTED):
        return "locally indiscrete space is not extremally disconnected"
    return None


def check_lc_separation(space: Topology) -> Optional[str]:
    pairs = [
        (P.LC_REGULAR, P.REGULAR),
        (P.LC_COMPLETELY_REGULAR, P.COMPLETELY_REGULAR),
        (P.LC_NORMAL, P.NORMAL),
    ]
    li = _has(space, P.LOCALLY_INDISCRETE)
    for strong, weak in pairs:
        if _has(space, strong) and not _has(space, weak):
            return f"{strong.value} space is not {weak.value}"
        if li and _has(space, weak) and not _has(space, strong):
            return f"locally indiscrete {weak.value} space is not {strong.value}"
    if _has(space, P.TD):
        if _has(space, P.LC_COMPLETELY_REGULAR) and not _has(space, P.COMPLETELY_REGULAR):
            return "lc-completely-regular TD space is not completely regular"
        if _has(space, P.LC_NORMAL) and not _has(space, P.HAUSDORFF):
            return "lc-normal TD space is not Hausdorff"
    return None


def check_lc_compact(space: Topology) -> Optional[str]:
    lc_compact = _has(space, P.LC_COMPACT)
    if lc_compact:
        for c in space.clopen_sets:
            if not _has(subspace(space, c), P.LC_COMPACT):
                return "clopen subspace of an lc-compact space is not lc-compact"
        if space.hull_mask(space.full) != space.full:
            return "lc-compact space is not compact"
    refined = tl_topology(space)
    if lc_compact != (refined.hull_mask(refined.full) == refined.full):
        return "lc-compact differs from compactness of the refined topology"
    return None


def check_implication_chain(space: Topology) -> Optional[str]:
    chain = [P.DOOR, P.SUBMAXIMAL, P.THALF, P.TD, P.T0]
    for stronger, weaker in zip(chain, chain[1:]):
        if _has(space, stronger) and not _has(space, weaker):
            return f"{stronger.value} space is not {weaker.value}"
    return None


def check_resolvable_not_submaximal(space: Topology) -> Optional[str]:
    if space.size and _has(space, P.RESOLVABLE) and _has(space, P.SUBMAXIMAL):
        return "nonempty resolvable space is submaximal"
    return None


# --- space pairs and maps ----------------------------------------------------

def check_finite_products(left: Topology, right: Topology) -> Optional[str]:
    prod = product([left, right])
    if _has(left, P.TD) and _has(right, P.TD) and not _has(prod, P.TD):
        return "product of TD spaces is not TD"
    sizes = [left.size, right.size]
    for index, factor in enumerate((left, right)):
        projection = FiniteMap(prod, factor, projection_assignment(sizes, index))
        if not is_open_map(projection):
            return "projection of a product is not open"
    if right.size == 1 and are_homeomorphic(prod, left) is None:
        return "product with a one-point space is not homeomorphic to the factor"
    return None


def check_continuous_lc_continuous(f: FiniteMap) -> Optional[str]:
    continuous = is_continuous(f)
    lc_continuous = is_lc_continuous(f)
    if continuous and not lc_continuous:
        return "continuous map is not lc-continuous"
    if f.is_surjective and _has(f.source, P.LC_COMPACT):
        if continuous and not _has(f.target, P.LC_COMPACT):
            return "continuous image of an lc-compact space is not lc-compact"
        if lc_continuous and f.target.hull_mask(f.target.full) != f.target.full:
            return "lc-continuous image of an lc-compact space is not compact"
    return None


def check_lc_preimages(f: FiniteMap) -> Optional[str]:
    if is_continuous(f):
        for b in locally_closed_masks(f.target):
            if not is_lc_mask(f.source, f.preimage_mask(b)):
                return "preimage of a locally closed set under a continuous map is not locally closed"
    if f.is_injective and is_open_map(f) and is_closed_map(f) and not is_locally_closed_map(f):
        return "injective open closed map is not a locally closed map"
    return None


def check_lc_continuous_refined(f: FiniteMap) -> Optional[str]:
    if is_lc_continuous(f) and not is_continuous(f.with_source(tl_topology(f.source))):
        return "lc-continuous map is not continuous from the refined topology"
    return None


_PROPOSITIONS = [
    Proposition("P01", "locally closed criteria",
                "The seven characterizations of a locally closed set agree on every subset.",
                Domain.SUBSETS, check_criteria_agree),
    Proposition("P02", "dense locally closed sets",
                "A dense locally closed set is open; related characterizations of open and dense "
                "locally closed sets hold.",
                Domain.SUBSETS, check_dense_lc_open),
    Proposition("P03", "intersections of locally closed sets",
                "Intersections of locally closed sets are locally closed; the union of two "
                "clopen-separated locally closed sets is locally closed.",
                Domain.SUBSET_PAIRS, check_lc_intersections),
    # checked counts spaces; the 2^n subsets of each are scanned inside the check
    Proposition("P04", "submaximal spaces",
                "A space is submaximal iff every subset is locally closed.",
                Domain.SPACES, check_submaximal_all_lc),
    Proposition("P05", "connected refined topology",
                "A nonempty space is indiscrete iff its refined topology is connected.",
                Domain.SPACES, check_indiscrete_connected),
    Proposition("P06", "T0 and the refined topology",
                "A space is T0 iff its refined topology is T0.",
                Domain.SPACES, check_t0_refined),
    Proposition("P07", "TD and the refined topology",
                "A space is TD iff its refined topology is discrete; T1 spaces have a discrete "
                "refined topology.",
                Domain.SPACES, check_td_refined),
    Proposition("P08", "TD versus T0",
                "Every TD space is T0, and every finite (principal) T0 space is TD.",
                Domain.SPACES, check_td_t0),
    Proposition("P09", "closures of disjoint sets",
                "In a submaximal space the closures of two disjoint sets meet in a discrete subspace.",
                Domain.SUBSET_PAIRS, check_submaximal_closure_meet),
    Proposition("P10", "boundaries in submaximal spaces",
                "In a submaximal space every boundary is a discrete subspace, and the closure of the "
                "derived set of a discrete set is discrete.",
                Domain.SUBSETS, check_submaximal_boundary),
    Proposition("P11", "locally indiscrete characterizations",
                "Locally indiscrete, every subset preopen, every singleton preopen, every closed set "
                "preopen, every locally closed set open, every locally closed set closed, every "
                "locally closed closure open, every dense open set regular open: all equivalent.",
                Domain.SPACES, check_locally_indiscrete_equivalents),
    Proposition("P12", "locally indiscrete T1 spaces",
                "For T1 spaces: discrete iff locally indiscrete iff every open set is regular open; "
                "for T1/2 spaces: locally indiscrete iff discrete.",
                Domain.SPACES, check_t1_locally_indiscrete),
    Proposition("P13", "refined topology equality",
                "A space is locally indiscrete iff it equals its refined topology; the refined "
                "topology of a principal space is principal.",
                Domain.SPACES, check_locally_indiscrete_refined),
    Proposition("P14", "separation in locally indiscrete spaces",
                "For locally indiscrete spaces: T1, T1/2, TD, T0, submaximal and discrete are equivalent.",
                Domain.SPACES, check_locally_indiscrete_separation),
    Proposition("P15", "locally indiscrete spaces are extremally disconnected",
                "Every locally indiscrete space is extremally disconnected.",
                Domain.SPACES, check_locally_indiscrete_extremal),
    Proposition("P16", "lc-separation axioms",
                "lc-regular, lc-completely regular and lc-normal imply their classical versions, with "
                "converses for locally indiscrete spaces; lc-normal TD spaces are Hausdorff.",
                Domain.SPACES, check_lc_separation),
    Proposition("P17", "lc-compactness",
                "Clopen subspaces of lc-compact spaces are lc-compact; lc-compact iff the refined "
                "topology is compact.",
                Domain.SPACES, check_lc_compact),
    Proposition("P18", "continuous maps are lc-continuous",
                "Every continuous map is lc-continuous; surjective images of lc-compact spaces are "
                "lc-compact (continuous) or compact (lc-continuous).",
                Domain.MAPS, check_continuous_lc_continuous),
    Proposition("P19", "preimages of locally closed sets",
                "Continuous preimages of locally closed sets are locally closed; injective open "
                "closed maps are locally closed maps.",
                Domain.MAPS, check_lc_preimages),
    Proposition("P20", "door to T0 chain",
                "door implies submaximal implies T1/2 implies TD implies T0.",
                Domain.SPACES, check_implication_chain),
    Proposition("P21", "resolvable spaces",
                "A nonempty resolvable space is never submaximal.",
                Domain.SPACES, check_resolvable_not_submaximal),
    Proposition("P22", "subspaces",
                "Subspaces of submaximal spaces are submaximal; locally closed sets of a subspace are "
                "traces of locally closed sets; a set is locally closed iff it is locally closed in "
                "its closure; isolated points behave under open and dense subspaces.",
                Domain.SUBSETS, check_subspace_behaviour),
    Proposition("P23", "finite products",
                "Finite products of TD spaces are TD; projections are open; a product with a point "
                "is homeomorphic to the factor.",
                Domain.SPACE_PAIRS, check_finite_products),
    Proposition("P24", "lc-continuity and the refined topology",
                "An lc-continuous map is continuous from the refined topology of its source.",
                Domain.MAPS, check_lc_continuous_refined),
    Proposition("P25", "clopen separation oracle",
                "Separating a point from a locally closed set by a clopen set is the same as "
                "separating it by a continuous map into the two-point discrete space.",
                Domain.SUBSETS, check_clopen_reduction),
]

PROPOSITIONS: Dict[str, Proposition] = {p.proposition_id: p for p in _PROPOSITIONS}


def list_propositions() -> List[Proposition]:
    return [PROPOSITIONS[key] for key in sorted(PROPOSITIONS)]


def get_proposition(proposition_id: str) -> Proposition:
    """
    Look up a proposition by id (case-insensitive, e.g. "P05" or "p05").

    Raises:
        UnknownProposition
    """
    proposition = PROPOSITIONS.get(str(proposition_id).upper())
    if proposition is None:
        raise UnknownProposition(str(proposition_id))
    return proposition
