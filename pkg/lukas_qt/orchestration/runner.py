"""
Orchestrates one verification run.

Builds the exhaustive corpus once (paths by backtracking, trees as root plus
ordered forest, generated independently of each other), then runs every check
in a fixed order and forwards each result to the sink. Metrics go to the sink
last.
"""

from __future__ import annotations

import logging
import sys
from typing import Dict

from tqdm import tqdm

from ..config import SuiteConfig
from ..dto import CheckResult
from ..ports import CheckSinkPort
from .checks import CHECKS, build_corpus

logger = logging.getLogger(__name__)


def run_suite(*, cfg: SuiteConfig, sink: CheckSinkPort, progress: bool = False) -> None:
    """
    Execute the full invariant suite under the bounds of `cfg`.

    A check that raises is reported as failed with the exception as its
    counterexample; the remaining checks still run.
    """
    metrics: Dict[str, int] = {
        "paths_examined": 0,
        "trees_examined": 0,
        "multisets_examined": 0,
        "profiles_examined": 0,
        "checks_run": 0,
        "checks_failed": 0,
    }

    # === Corpus ===
    logger.info("building corpus up to %d steps", cfg.max_steps)
    corpus = build_corpus(cfg.max_steps)
    metrics["paths_examined"] = len(corpus.paths)
    metrics["trees_examined"] = len(corpus.trees)
    metrics["multisets_examined"] = len(corpus.by_multiset)
    metrics["profiles_examined"] = len(corpus.by_profile)
    logger.info(
        "corpus: %d paths, %d trees, %d multisets",
        len(corpus.paths),
        len(corpus.trees),
        len(corpus.by_multiset),
    )

    # === Checks ===
    pbar = tqdm(total=len(CHECKS), file=sys.stderr, disable=not progress)
    for name, check in CHECKS:
        pbar.set_description(name)
        try:
            result = check(corpus, cfg)
        except Exception as e:  # noqa: BLE001
            logger.exception("check %s raised", name)
            result = CheckResult(name=name, instances=0, passed=False, counterexample=f"error: {e!r}")

        metrics["checks_run"] += 1
        if not result.passed:
            metrics["checks_failed"] += 1
            logger.warning("%s FAILED after %d instances: %s", name, result.instances, result.counterexample)
        else:
            logger.info("%s passed (%d instances)", name, result.instances)

        sink.on_check(result)
        pbar.update()
    pbar.close()

    sink.on_metrics(metrics)
