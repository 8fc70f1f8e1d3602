"""
Matching of down-steps to up-steps.

Two independent rules produce the same Matching on every valid path:

- `match_downs` (production): scan left to right and give each down-step to
  the closest earlier up-step that still has free capacity (its degree minus
  the down-steps it already received).
- `match_downs_by_ray` (oracle): from the midpoint of each down-step shoot a
  horizontal ray to the left; the match is the first up-step of positive
  degree whose vertical span strictly contains the ray height.

Indices are 1-based step positions. The final down-step is never matched.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, List, Tuple

from ..dto import LukasPath, Matching


def match_downs(path: LukasPath) -> Matching:
    pairs: Dict[int, Tuple[int, int]] = {}
    # [up index, degree, assigned so far]; entries leave the stack once full
    open_ups: List[List[int]] = []
    last = len(path)

    for j, step in enumerate(path.steps, start=1):
        if j == last:
            break
        if not step.is_down:
            if step.degree > 0:
                open_ups.append([j, step.degree, 0])
            continue

        entry = open_ups[-1]
        entry[2] += 1
        pairs[j] = (entry[0], entry[2])
        if entry[2] == entry[1]:
            open_ups.pop()

    return Matching(pairs)


def match_downs_by_ray(path: LukasPath) -> Matching:
    steps = path.steps
    last = len(steps)

    # starts[i] = height at which step i+1 starts
    starts: List[int] = []
    height = 0
    for step in steps:
        starts.append(height)
        height += step.degree

    targets: Dict[int, int] = {}
    for j in range(1, last):
        if not steps[j - 1].is_down:
            continue
        # the down-step goes from h + 1 to h; its midpoint sits at h + 1/2
        h = starts[j - 1] - 1
        for i in range(j - 1, 0, -1):
            k = steps[i - 1].degree
            if k > 0 and starts[i - 1] <= h < starts[i - 1] + k:
                targets[j] = i
                break

    ranks: Dict[int, int] = defaultdict(int)
    pairs: Dict[int, Tuple[int, int]] = {}
    for j in sorted(targets):
        i = targets[j]
        ranks[i] += 1
        pairs[j] = (i, ranks[i])
    return Matching(pairs)
