from __future__ import annotations

import json
from itertools import product

import pytest

from lukas_qt.config import SuiteConfig
from lukas_qt.dto import CheckResult
from lukas_qt.orchestration import runner
from lukas_qt.orchestration.checks import CHECKS, build_corpus, check_profile_length_three
from lukas_qt.orchestration.report import CollectingSink, report_to_json, verify_report
from lukas_qt.paths.enumeration import enumerate_by_profile

SMALL = SuiteConfig(
    max_steps=6,
    brute_force_max_steps=6,
    catalan_max=5,
    profile_max_length=2,
    profile_max_entry=2,
    lodestar_probe_degree=2,
    series_order=3,
    series_degree=2,
)

EXPECTED_NAMES = [
    "enumeration_consistency",
    "brute_force_profiles",
    "bijection_round_trip",
    "statistic_transfer",
    "matching_equivalence",
    "mirror_exchange",
    "lodestar_swap",
    "lodestar_degree_irrelevance",
    "root_lodestar",
    "mirror_involution",
    "lodestar_involution",
    "symmetry_unconstrained",
    "symmetry_first",
    "symmetry_first_last",
    "symmetry_last",
    "pinned_values",
    "catalan_counts",
    "evaluation_counts",
    "profile_last_degree",
    "profile_length_three",
    "series_reconciliation",
    "series_truncation",
    "series_stationary",
]


@pytest.fixture(scope="module")
def small_report():
    return verify_report(SMALL)


def test_corpus_sizes():
    corpus = build_corpus(6)
    assert corpus.paths_by_length == {1: 1, 2: 1, 3: 2, 4: 5, 5: 14, 6: 42}
    assert corpus.trees_by_size == corpus.paths_by_length
    assert len(corpus.paths) == len(corpus.trees) == 65
    assert sum(len(v) for v in corpus.by_multiset.values()) == 65


def test_all_checks_pass_in_fixed_order(small_report):
    assert [c.name for c in small_report.checks] == EXPECTED_NAMES
    assert [name for name, _ in CHECKS] == EXPECTED_NAMES
    failed = [c for c in small_report.checks if not c.passed]
    assert failed == []
    assert small_report.overall
    assert all(c.instances > 0 for c in small_report.checks)


def test_metrics(small_report):
    m = small_report.metrics
    assert m["paths_examined"] == 65
    assert m["trees_examined"] == 65
    assert m["checks_run"] == 23
    assert m["checks_failed"] == 0
    assert m["multisets_examined"] > 0
    assert m["profiles_examined"] >= m["multisets_examined"]


def test_report_json_is_canonical(small_report):
    text = report_to_json(small_report)
    assert text == report_to_json(verify_report(SMALL))
    data = json.loads(text)
    assert list(data) == sorted(data)
    assert data["overall"] is True
    assert [c["name"] for c in data["checks"]] == EXPECTED_NAMES


def test_single_step_suite_passes():
    cfg = SMALL.model_copy(update={"max_steps": 1})
    report = verify_report(cfg)
    assert report.overall
    assert report.metrics["paths_examined"] == 1


def test_failing_and_crashing_checks_are_reported(monkeypatch):
    def failing(corpus, cfg):
        return CheckResult("always_fails", 1, False, "path D")

    def crashing(corpus, cfg):
        raise RuntimeError("boom")

    def passing(corpus, cfg):
        return CheckResult("fine", 2, True)

    monkeypatch.setattr(
        runner, "CHECKS", (("always_fails", failing), ("crashes", crashing), ("fine", passing))
    )
    sink = CollectingSink()
    runner.run_suite(cfg=SMALL.model_copy(update={"max_steps": 2}), sink=sink)
    report = sink.report()

    assert [c.name for c in report.checks] == ["always_fails", "crashes", "fine"]
    assert report.first_failure().counterexample == "path D"
    assert not report.checks[1].passed
    assert "boom" in report.checks[1].counterexample
    assert report.metrics["checks_run"] == 3
    assert report.metrics["checks_failed"] == 2
    assert not report.overall


def test_profile_length_three_covers_every_path():
    result = check_profile_length_three(build_corpus(1), SMALL)
    profiles = list(product(range(SMALL.profile_max_entry + 1), repeat=3))
    paths = sum(1 for prof in profiles for _ in enumerate_by_profile(prof))
    assert result.passed
    assert result.instances == len(profiles) + paths
