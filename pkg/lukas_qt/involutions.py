"""
Path-level involutions that exchange area and depth.

Both are compositions of tree operations so each factor can be tested alone:

- mirror_involution   (psi) = tree_to_path . mirror . path_to_tree
  keeps the first up-step degree and the profile multiset.
- lodestar_involution (phi) = tree_to_path . lodestar_swap . mirror . path_to_tree
  additionally keeps the last up-step degree.
"""

from __future__ import annotations

from .dto import LukasPath
from .trees.bijection import path_to_tree, tree_to_path
from .trees.lodestar import lodestar_swap
from .trees.structure import mirror


def mirror_involution(path: LukasPath) -> LukasPath:
    return tree_to_path(mirror(path_to_tree(path)))


def lodestar_involution(path: LukasPath) -> LukasPath:
    return tree_to_path(lodestar_swap(mirror(path_to_tree(path))))
