"""
Path validation.

Goal: a single, side-effect-free check that a step sequence is a Łukasiewicz
path before any statistic is computed on it. The failing invariant is named in
the raised InvalidPath so the CLI can report it verbatim.
"""

from __future__ import annotations

from typing import Iterable

from ..dto import LukasPath, Step
from ..errors import InvalidPath


def validate_steps(steps: Iterable[Step]) -> LukasPath:
    """
    Return the steps as a LukasPath or raise InvalidPath.

    Checks, in order:
    - the sequence is nonempty;
    - partial height sums stay >= 0 after every step except the last;
    - the last step is D;
    - the total height is -1.
    """
    seq = tuple(steps)
    if not seq:
        raise InvalidPath("nonempty", None, "a path has at least one step")

    height = 0
    last = len(seq)
    for i, step in enumerate(seq, start=1):
        height += step.degree
        if i < last and height < 0:
            raise InvalidPath("prefix-height", i, f"height {height} before the last step")

    if not seq[-1].is_down:
        raise InvalidPath("last-step", last, f"last step is {seq[-1]}, expected D")
    if height != -1:
        raise InvalidPath("total-height", None, f"total height {height}, expected -1")
    return LukasPath(seq)


def is_valid(steps: Iterable[Step]) -> bool:
    """Predicate form of validate_steps."""
    try:
        validate_steps(steps)
    except InvalidPath:
        return False
    return True
