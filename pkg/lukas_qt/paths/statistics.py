"""
Per-path statistics: profile, area and depth.

- Area vector: the height at which each up-step starts.
- Depth vector: the value d carried by each up-step, where d is 0 on the first
  step, a matched down-step adds its rank to the d of its up-step, and an
  up-step inherits d from the step before it.

The final down-step never receives a d value; only up-steps are read.
"""

from __future__ import annotations

from typing import List, Optional

from ..dto import DegreeMultiset, LukasPath, Profile, StatVector
from .matching import match_downs


def profile(path: LukasPath) -> Profile:
    """Degrees of the up-steps, left to right."""
    return tuple(s.degree for s in path.steps if not s.is_down)


def profile_multiset(path: LukasPath) -> DegreeMultiset:
    return DegreeMultiset.of(profile(path))


def first_degree(path: LukasPath) -> Optional[int]:
    """Degree of the first up-step, or None for the path "D"."""
    prof = profile(path)
    return prof[0] if prof else None


def last_degree(path: LukasPath) -> Optional[int]:
    """Degree of the last up-step, or None for the path "D"."""
    prof = profile(path)
    return prof[-1] if prof else None


def area_vector(path: LukasPath) -> StatVector:
    out: List[int] = []
    height = 0
    for step in path.steps:
        if not step.is_down:
            out.append(height)
        height += step.degree
    return tuple(out)


def area(path: LukasPath) -> int:
    return sum(area_vector(path))


def depth_vector(path: LukasPath) -> StatVector:
    steps = path.steps
    pairs = match_downs(path).pairs
    last = len(steps)

    d: List[int] = [0] * (last + 1)  # 1-based; d[last] stays unset
    out: List[int] = []
    for i in range(1, last):
        step = steps[i - 1]
        if step.is_down:
            up_index, rank = pairs[i]
            d[i] = d[up_index] + rank
        else:
            d[i] = d[i - 1] if i > 1 else 0
            out.append(d[i])
    return tuple(out)


def depth(path: LukasPath) -> int:
    return sum(depth_vector(path))
