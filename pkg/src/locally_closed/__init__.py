"""
Locally closed sets and the refined topology they generate.
"""

from .criteria import (
    LC_CRITERIA,
    criterion_a,
    criterion_b,
    criterion_c,
    criterion_d,
    criterion_e,
    criterion_f,
    criterion_g,
    evaluate_criteria,
    criteria_agree,
)
from .family import (
    LcDecomposition,
    is_lc_mask,
    is_locally_closed,
    lc_decompositions,
    standard_decomposition,
    locally_closed_masks,
    locally_closed_family,
    tl_topology,
)

__all__ = [
    "LC_CRITERIA",
    "criterion_a",
    "criterion_b",
    "criterion_c",
    "criterion_d",
    "criterion_e",
    "criterion_f",
    "criterion_g",
    "evaluate_criteria",
    "criteria_agree",
    "LcDecomposition",
    "is_lc_mask",
    "is_locally_closed",
    "lc_decompositions",
    "standard_decomposition",
    "locally_closed_masks",
    "locally_closed_family",
    "tl_topology",
]
