"""
Output port of the verification suite.

The runner only talks to this interface; the CLI plugs in a collecting sink,
tests can plug in anything with the same two methods.
"""

from __future__ import annotations

from typing import Mapping, Protocol

from .dto import CheckResult


class CheckSinkPort(Protocol):
    """Receives check results and a final metrics snapshot from `run_suite`."""

    def on_check(self, result: CheckResult) -> None:
        """Receive one finished check."""
        ...

    def on_metrics(self, metrics: Mapping[str, int]) -> None:
        """
        Receive counters at the end of the run (paths_examined,
        trees_examined, checks_failed, ...).
        """
        ...
