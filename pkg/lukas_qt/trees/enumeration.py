"""
Direct generation of plane trees by size.

Trees are built as a root over an ordered forest, without going through paths,
so they can serve as an independent corpus for the bijection round trip.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Tuple

from ..dto import PlaneTree


def enumerate_trees(n_nodes: int) -> Iterator[PlaneTree]:
    """Every plane tree with exactly `n_nodes` nodes (C_{n-1} of them)."""
    if n_nodes < 1:
        return iter(())
    return (PlaneTree(forest) for forest in _forests(n_nodes - 1))


@lru_cache(maxsize=None)
def _trees(n_nodes: int) -> Tuple[PlaneTree, ...]:
    return tuple(PlaneTree(forest) for forest in _forests(n_nodes - 1))


@lru_cache(maxsize=None)
def _forests(n_nodes: int) -> Tuple[Tuple[PlaneTree, ...], ...]:
    """Ordered sequences of trees with `n_nodes` nodes in total."""
    if n_nodes == 0:
        return ((),)
    out = []
    for first_size in range(1, n_nodes + 1):
        for first in _trees(first_size):
            for rest in _forests(n_nodes - first_size):
                out.append((first,) + rest)
    return tuple(out)
