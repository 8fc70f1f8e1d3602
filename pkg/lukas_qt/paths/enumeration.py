"""
Constrained enumeration of Łukasiewicz paths by backtracking.

All generators yield each qualifying path exactly once, in lexicographic step
order with D < U_0 < U_1 < ...

Public API:
- enumerate_by_profile(K)              -> paths with profile exactly K
- enumerate_by_multiset(M, first, last) -> L_M, L_{a,M}, L_{M,b}, L_{a,M,b}
- enumerate_by_length(n)               -> every path with n steps
- catalan_numbers(n)                   -> C_0..C_n by the convolution recurrence
"""

from __future__ import annotations

import heapq
from typing import Iterator, List, Optional, Sequence, Tuple

from more_itertools import distinct_permutations

from ..dto import DegreeMultiset, LukasPath, Profile, Step

_DOWN = Step.down()


def enumerate_by_profile(profile: Sequence[int]) -> Iterator[LukasPath]:
    """
    Place sum(K) + 1 down-steps around the fixed up-step sequence K.

    A down-step is allowed while the height stays >= 0, or when it is the very
    last step (all up-steps used, one down-step left, height 0).
    """
    ups = tuple(Step.up(k) for k in profile)
    n_ups = len(ups)
    # pending moves: (prefix length, step, next up index, downs left, height after)
    stack: List[Tuple[int, Step, int, int, int]] = []

    def push_moves(depth: int, i_up: int, downs_left: int, height: int) -> None:
        # U pushed before D so that D is explored first
        if i_up < n_ups:
            step = ups[i_up]
            stack.append((depth, step, i_up + 1, downs_left, height + step.degree))
        if height > 0 or (downs_left == 1 and i_up == n_ups):
            stack.append((depth, _DOWN, i_up, downs_left - 1, height - 1))

    def walk() -> Iterator[LukasPath]:
        buf: List[Step] = []
        push_moves(0, 0, sum(profile) + 1, 0)
        while stack:
            depth, step, i_up, downs_left, height = stack.pop()
            del buf[depth:]
            buf.append(step)
            if downs_left == 0:
                yield LukasPath(tuple(buf))
            else:
                push_moves(depth + 1, i_up, downs_left, height)

    return walk()


def profiles_of(
    multiset: DegreeMultiset, *, first: Optional[int] = None, last: Optional[int] = None
) -> Iterator[Profile]:
    """Permutation-distinct profiles of `multiset` honouring first/last constraints."""
    for perm in distinct_permutations(multiset.expand()):
        if first is not None and (not perm or perm[0] != first):
            continue
        if last is not None and (not perm or perm[-1] != last):
            continue
        yield tuple(perm)


def constrained_multiset(
    multiset: DegreeMultiset, *, first: Optional[int] = None, last: Optional[int] = None
) -> DegreeMultiset:
    """M ⊎ {a} ⊎ {b}, the full profile multiset of L_{a,M,b} and its variants."""
    extra = [d for d in (first, last) if d is not None]
    return multiset.add(*extra) if extra else multiset


def enumerate_by_multiset(
    multiset: DegreeMultiset, *, first: Optional[int] = None, last: Optional[int] = None
) -> Iterator[LukasPath]:
    """
    Union of enumerate_by_profile over the admissible profiles, merged back
    into a single lexicographic stream. Unsatisfiable constraints give an
    empty stream.
    """
    full = constrained_multiset(multiset, first=first, last=last)
    streams = [enumerate_by_profile(k) for k in profiles_of(full, first=first, last=last)]
    return heapq.merge(*streams)


def enumerate_by_length(n: int) -> Iterator[LukasPath]:
    """
    Every path with exactly n steps. After a step the height h' must satisfy
    0 <= h' <= r - 1 where r is the number of steps still to place, except for
    the last step which must be D from height 0.
    """
    buf: List[Step] = []

    def extend(height: int, remaining: int) -> Iterator[LukasPath]:
        if remaining == 0:
            yield LukasPath(tuple(buf))
            return
        after = remaining - 1
        if after == 0:
            if height == 0:
                buf.append(_DOWN)
                yield LukasPath(tuple(buf))
                buf.pop()
            return
        # D first, then U_0, U_1, ... while the path can still close in time
        for degree in range(-1, after - height):
            if height + degree < 0:
                continue
            buf.append(Step(degree))
            yield from extend(height + degree, after)
            buf.pop()

    if n < 1:
        return iter(())
    return extend(0, n)


def catalan_numbers(n: int) -> List[int]:
    """C_0..C_n from C_{m+1} = sum_i C_i C_{m-i}."""
    cat = [1]
    for m in range(n):
        cat.append(sum(cat[i] * cat[m - i] for i in range(m + 1)))
    return cat
