"""
Constructions module: subspaces, products, disjoint sums, relabelings.
"""

from .spaces import (
    PRODUCT_SEPARATOR,
    permute_mask,
    compress_mask,
    relabel,
    subspace,
    product,
    projection_assignment,
    disjoint_sum,
    summand_masks,
)

__all__ = [
    "PRODUCT_SEPARATOR",
    "permute_mask",
    "compress_mask",
    "relabel",
    "subspace",
    "product",
    "projection_assignment",
    "disjoint_sum",
    "summand_masks",
]
