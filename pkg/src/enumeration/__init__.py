"""
Enumeration module: all topologies on n labelled points, their
homeomorphism classes and canonical forms.
"""

from .preorders import (
    check_enumeration_size,
    first_rows,
    iter_rows,
    iter_rows_parallel,
    enumerate_labeled,
    count_labeled,
)
from .oracle import ORACLE_CAP, is_closed_family, iter_topology_families, oracle_count
from .canonical import (
    canonical_key,
    canonical_form,
    topology_from_key,
    enumerate_classes,
)

__all__ = [
    "check_enumeration_size",
    "first_rows",
    "iter_rows",
    "iter_rows_parallel",
    "enumerate_labeled",
    "count_labeled",
    "ORACLE_CAP",
    "is_closed_family",
    "iter_topology_families",
    "oracle_count",
    "canonical_key",
    "canonical_form",
    "topology_from_key",
    "enumerate_classes",
]
