"""
Collecting sink and the canonical JSON form of a verification report.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Mapping

from ..config import SuiteConfig
from ..dto import CheckResult, VerifyReport
from ..ports import CheckSinkPort
from .runner import run_suite


class CollectingSink(CheckSinkPort):
    def __init__(self) -> None:
        self.checks: List[CheckResult] = []
        self.metrics: Dict[str, int] = {}

    def on_check(self, result: CheckResult) -> None:
        self.checks.append(result)

    def on_metrics(self, metrics: Mapping[str, int]) -> None:
        self.metrics = dict(metrics)

    def report(self) -> VerifyReport:
        return VerifyReport(checks=tuple(self.checks), metrics=dict(self.metrics))


def verify_report(cfg: SuiteConfig, *, progress: bool = False) -> VerifyReport:
    """Run the suite into a fresh CollectingSink and return its report."""
    sink = CollectingSink()
    run_suite(cfg=cfg, sink=sink, progress=progress)
    return sink.report()


def report_to_dict(report: VerifyReport) -> Dict[str, Any]:
    return {
        "overall": report.overall,
        "checks": [
            {
                "name": c.name,
                "instances": c.instances,
                "passed": c.passed,
                "counterexample": c.counterexample,
            }
            for c in report.checks
        ],
        "metrics": dict(report.metrics),
    }


def report_to_json(report: VerifyReport) -> str:
    """Canonical text: sorted keys, checks in run order, nothing run-dependent."""
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2)
