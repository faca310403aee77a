"""
The seven equivalent characterizations of a locally closed set.

Criterion (e), cl(A)∖A is closed, is the one used for evaluation. The others
are implemented independently of it and serve the agreement checks.
"""

import logging
from typing import Callable, Dict

from ..core import Topology

logger = logging.getLogger(__name__)


def criterion_a(space: Topology, mask: int) -> bool:
    """Every x ∈ A has an open U ∋ x such that A∩U is closed in the subspace U."""
    for x in range(space.size):
        if not mask >> x & 1:
            continue
        found = False
        for u in space.opens:
            if not u >> x & 1:
                continue
            trace = mask & u
            # closed in U iff U ∩ cl(A∩U) adds nothing to A∩U
            if space.closure_mask(trace) & u == trace:
                found = True
                break
        if not found:
            return False
    return True


def criterion_b(space: Topology, mask: int) -> bool:
    """A = G ∩ B with G open and B closed."""
    return any(g & f == mask for g in space.opens for f in space.closed_sets)


def criterion_c(space: Topology, mask: int) -> bool:
    """A = H ∩ cl(A) with H open."""
    closed_hull = space.closure_mask(mask)
    return any(h & closed_hull == mask for h in space.opens)


def criterion_d(space: Topology, mask: int) -> bool:
    """A = E ∖ F with E and F closed."""
    return any(e & ~f == mask for e in space.closed_sets for f in space.closed_sets)


def criterion_e(space: Topology, mask: int) -> bool:
    """cl(A) ∖ A is closed."""
    return space.is_closed(space.closure_mask(mask) & ~mask)


def criterion_f(space: Topology, mask: int) -> bool:
    """A ⊆ int(A ∪ (X ∖ cl A))."""
    extended = mask | (space.full & ~space.closure_mask(mask))
    return mask & ~space.interior_mask(extended) == 0


def criterion_g(space: Topology, mask: int) -> bool:
    """A ∪ (X ∖ cl A) is open."""
    return space.is_open(mask | (space.full & ~space.closure_mask(mask)))


LC_CRITERIA: Dict[str, Callable[[Topology, int], bool]] = {
    "a": criterion_a,
    "b": criterion_b,
    "c": criterion_c,
    "d": criterion_d,
    "e": criterion_e,
    "f": criterion_f,
    "g": criterion_g,
}


def evaluate_criteria(space: Topology, mask: int) -> Dict[str, bool]:
    return {name: check(space, mask) for name, check in LC_CRITERIA.items()}


def criteria_agree(space: Topology, mask: int) -> bool:
    return len(set(evaluate_criteria(space, mask).values())) == 1
