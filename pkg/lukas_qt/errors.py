"""
Exception hierarchy for lukas_qt.

Every error raised while reading user input derives from LukasError (itself a
ValueError), so callers at the boundary (the CLI) can catch one type.
"""

from __future__ import annotations

from typing import Literal, Optional

PathInvariant = Literal["nonempty", "last-step", "prefix-height", "total-height"]


class LukasError(ValueError):
    """Base class for domain errors."""


class FormatError(LukasError):
    """Malformed textual or JSON encoding."""


class TokenError(FormatError):
    """A path token is neither 'D' nor 'U<k>'."""

    def __init__(self, token: str, position: int) -> None:
        self.token = token
        self.position = position
        super().__init__(f"unrecognized path token {token!r} at position {position}")


class InvalidPath(LukasError):
    """A step sequence violates one of the Łukasiewicz path invariants."""

    def __init__(self, invariant: PathInvariant, step_index: Optional[int], detail: str) -> None:
        self.invariant = invariant
        self.step_index = step_index
        where = f" at step {step_index}" if step_index is not None else ""
        super().__init__(f"invalid path ({invariant}){where}: {detail}")


class ConfigError(LukasError):
    """Suite configuration could not be loaded or validated."""
