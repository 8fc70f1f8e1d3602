"""
Structural helpers on plane trees: traversal, addressing, reflection.

Addresses (NodePath) are tuples of 1-based child indices from the root.
Everything here is iterative so deep trees never hit the recursion limit.
"""

from __future__ import annotations

from collections import Counter
from typing import List, Tuple

from ..dto import DegreeMultiset, NodePath, PlaneTree


def node_count(tree: PlaneTree) -> int:
    count = 0
    stack = [tree]
    while stack:
        node = stack.pop()
        count += 1
        stack.extend(node.children)
    return count


def preorder_internal(tree: PlaneTree) -> List[Tuple[NodePath, PlaneTree]]:
    """Internal nodes with their addresses, in preorder (contour order)."""
    out: List[Tuple[NodePath, PlaneTree]] = []
    stack: List[Tuple[NodePath, PlaneTree]] = [((), tree)]
    while stack:
        address, node = stack.pop()
        if node.is_leaf:
            continue
        out.append((address, node))
        for idx in range(node.degree, 0, -1):
            stack.append((address + (idx,), node.children[idx - 1]))
    return out


def internal_degree_multiset(tree: PlaneTree) -> DegreeMultiset:
    """Child counts of all internal nodes (root included)."""
    return DegreeMultiset.from_mapping(Counter(node.degree for _, node in preorder_internal(tree)))


def subtree_at(tree: PlaneTree, address: NodePath) -> PlaneTree:
    node = tree
    for idx in address:
        if not 1 <= idx <= node.degree:
            raise KeyError(f"address {address!r} does not resolve")
        node = node.children[idx - 1]
    return node


def replace_subtree(tree: PlaneTree, address: NodePath, replacement: PlaneTree) -> PlaneTree:
    """Copy of `tree` with the node at `address` replaced; untouched branches are shared."""
    ancestors: List[PlaneTree] = []
    node = tree
    for idx in address:
        if not 1 <= idx <= node.degree:
            raise KeyError(f"address {address!r} does not resolve")
        ancestors.append(node)
        node = node.children[idx - 1]

    rebuilt = replacement
    for parent, idx in zip(reversed(ancestors), reversed(address)):
        kids = parent.children
        rebuilt = PlaneTree(kids[: idx - 1] + (rebuilt,) + kids[idx:])
    return rebuilt


def mirror(tree: PlaneTree) -> PlaneTree:
    """Left-right reflection: reverse the child order of every node."""
    built: List[PlaneTree] = []
    work: List[Tuple[PlaneTree, bool]] = [(tree, False)]
    while work:
        node, expanded = work.pop()
        if node.is_leaf:
            built.append(node)
        elif expanded:
            kids = built[-node.degree :]
            del built[-node.degree :]
            built.append(PlaneTree(tuple(reversed(kids))))
        else:
            work.append((node, True))
            work.extend((child, False) for child in reversed(node.children))
    return built[0]
