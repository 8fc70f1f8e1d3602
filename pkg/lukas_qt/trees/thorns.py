"""
Left and right thorns of internal nodes.

A thorn of u is a descending edge of a proper ancestor v lying left (lthorn) or
right (rthorn) of the v -> u path. Going from a node with k children down to
its l-th child adds l - 1 left thorns and k - l right thorns, so both counts
are accumulated top-down in one preorder pass.
"""

from __future__ import annotations

from typing import List, Tuple

from ..dto import PlaneTree, ThornProfile


def thorns(tree: PlaneTree) -> ThornProfile:
    per_node: List[Tuple[int, int]] = []
    stack: List[Tuple[PlaneTree, int, int]] = [(tree, 0, 0)]
    while stack:
        node, lt, rt = stack.pop()
        if node.is_leaf:
            continue
        per_node.append((lt, rt))
        k = node.degree
        for ell in range(k, 0, -1):
            stack.append((node.children[ell - 1], lt + ell - 1, rt + k - ell))
    return ThornProfile(tuple(per_node))
