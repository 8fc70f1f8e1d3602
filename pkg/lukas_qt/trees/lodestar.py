"""
Lodestars and the lodestar swap.

A lodestar is an internal node whose children are all leaves (a star). The
left lodestar is the first one in preorder and the right lodestar the last;
the right lodestar is always the last internal node in preorder.

The swap exchanges the two lodestar subtrees. Both are stars, so exchanging
their child counts is the same operation.
"""

from __future__ import annotations

from typing import Optional

from ..dto import LEAF, Lodestars, NodePath, PlaneTree
from .structure import preorder_internal, replace_subtree, subtree_at


def find_lodestars(tree: PlaneTree) -> Optional[Lodestars]:
    stars = [address for address, node in preorder_internal(tree) if node.is_star]
    if not stars:
        return None
    return Lodestars(left=stars[0], right=stars[-1])


def with_star_degree(tree: PlaneTree, address: NodePath, child_count: int) -> PlaneTree:
    """Replace the star at `address` with a star of `child_count` leaves."""
    if child_count < 1:
        raise ValueError("a star has at least one child")
    if not subtree_at(tree, address).is_star:
        raise ValueError(f"node at {address!r} is not a star")
    return replace_subtree(tree, address, PlaneTree((LEAF,) * child_count))


def lodestar_swap(tree: PlaneTree) -> PlaneTree:
    """Identity when the tree has no internal node or both lodestars coincide."""
    stars = find_lodestars(tree)
    if stars is None or stars.coincide:
        return tree

    left_count = subtree_at(tree, stars.left).degree
    right_count = subtree_at(tree, stars.right).degree
    swapped = with_star_degree(tree, stars.left, right_count)
    return with_star_degree(swapped, stars.right, left_count)
