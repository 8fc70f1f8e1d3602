"""
Contour bijections between Łukasiewicz paths and plane trees.

- tree_to_path (lambda): preorder walk, leaf -> D, node with k+1 children -> U_k.
- path_to_tree (tau): fill the leftmost empty bud with a leaf (D) or with an
  internal node carrying k+1 buds (U_k).

path_to_tree reads the path right to left with a stack of finished subtrees,
which builds the same tree as the bud rule without mutable nodes: a D pushes a
leaf, a U_k pops its k+1 children (leftmost on top) and pushes the new node.
"""

from __future__ import annotations

from typing import List

from ..dto import LEAF, LukasPath, PlaneTree, Step
from ..errors import InvalidPath


def path_to_tree(path: LukasPath) -> PlaneTree:
    stack: List[PlaneTree] = []
    for step in reversed(path.steps):
        if step.is_down:
            stack.append(LEAF)
            continue
        arity = step.degree + 1
        if len(stack) < arity:
            raise InvalidPath("prefix-height", None, "path does not describe a complete tree")
        children = tuple(stack[-1 : -arity - 1 : -1])
        del stack[-arity:]
        stack.append(PlaneTree(children))

    if len(stack) != 1:
        raise InvalidPath("total-height", None, "path does not describe a single tree")
    return stack[0]


def tree_to_path(tree: PlaneTree) -> LukasPath:
    steps: List[Step] = []
    stack: List[PlaneTree] = [tree]
    while stack:
        node = stack.pop()
        if node.is_leaf:
            steps.append(Step.down())
            continue
        steps.append(Step.up(node.degree - 1))
        stack.extend(reversed(node.children))
    return LukasPath(tuple(steps))
