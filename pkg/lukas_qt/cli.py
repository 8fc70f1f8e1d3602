"""
Command-line front end.

Subcommands: stats, map, poly, verify, series. Results go to stdout as JSON
(or the text encoding for `map`), diagnostics and logs go to stderr.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple

import click
from dotenv import load_dotenv

from .config import AppConfig, load_suite_config
from .dto import LukasPath, PlaneTree
from .errors import ConfigError, LukasError
from .intake.codec import (
    dump_tree_json,
    format_multiset,
    format_path,
    format_tree,
    parse_multiset,
    parse_path,
    parse_profile,
    parse_tree,
    path_to_json,
)
from .involutions import lodestar_involution, mirror_involution
from .orchestration.report import report_to_json, verify_report
from .paths.matching import match_downs
from .paths.statistics import area, area_vector, depth, depth_vector, profile, profile_multiset
from .qt_poly import c_tilde, c_tilde_profile, format_poly, is_symmetric, poly_to_json
from .series import series_to_json, solve_F, verify_series
from .trees.bijection import path_to_tree, tree_to_path
from .trees.lodestar import lodestar_swap
from .trees.structure import mirror
from .utils import init_logging

# apply target -> (input kind, function)
_MAPS: Dict[str, Tuple[str, Callable[[Any], Any]]] = {
    "tau": ("path", path_to_tree),
    "lambda": ("tree", tree_to_path),
    "mirror": ("tree", mirror),
    "swap": ("tree", lodestar_swap),
    "psi": ("path", mirror_involution),
    "phi": ("path", lodestar_involution),
}


def _log_level_option(fn: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--log-level",
        type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
        default=None,
        help="Overrides LUKAS_QT_LOG_LEVEL.",
    )(fn)


def _setup_logging(level: Optional[str]) -> None:
    app = AppConfig.from_env()
    init_logging(level or app.log_level, app.log_file or None)


def _emit_json(obj: Any) -> None:
    click.echo(json.dumps(obj, indent=2))


def _parse(parser: Callable[[str], Any], text: str, param: str) -> Any:
    try:
        return parser(text)
    except LukasError as e:
        raise click.BadParameter(str(e), param_hint=param) from e


@click.group()
def cli() -> None:
    """Łukasiewicz paths, plane trees and their area/depth polynomials."""
    load_dotenv()


@cli.command()
@click.option("--path", "path_text", required=True, help='Path, e.g. "U1 U0 D D" or "[1,0,-1,-1]".')
@_log_level_option
def stats(path_text: str, log_level: Optional[str]) -> None:
    """Profile, area and depth of one path."""
    _setup_logging(log_level)
    path: LukasPath = _parse(parse_path, path_text, "--path")
    _emit_json(
        {
            "steps": format_path(path),
            "profile": list(profile(path)),
            "multiset": format_multiset(profile_multiset(path)),
            "area_vector": list(area_vector(path)),
            "area": area(path),
            "depth_vector": list(depth_vector(path)),
            "depth": depth(path),
            "matching": [
                {"down": j, "up": i, "rank": rank} for j, i, rank in match_downs(path).as_rows()
            ],
        }
    )


@cli.command(name="map")
@click.option("--path", "path_text", default=None, help="Input path (for tau, psi, phi).")
@click.option("--tree", "tree_text", default=None, help='Input tree, e.g. "((()) ())" (for lambda, mirror, swap).')
@click.option("--apply", "target", required=True, type=click.Choice(sorted(_MAPS)), help="Map to apply.")
@click.option("--json", "as_json", is_flag=True, help="Print the JSON encoding instead of text.")
@_log_level_option
def map_cmd(
    path_text: Optional[str], tree_text: Optional[str], target: str, as_json: bool, log_level: Optional[str]
) -> None:
    """Apply one bijection, tree operation or involution."""
    _setup_logging(log_level)
    if (path_text is None) == (tree_text is None):
        raise click.UsageError("give exactly one of --path or --tree")

    kind, fn = _MAPS[target]
    given = "path" if path_text is not None else "tree"
    if kind != given:
        raise click.UsageError(f"--apply {target} takes a {kind}, got a {given}")

    if given == "path":
        source: Any = _parse(parse_path, path_text or "", "--path")
    else:
        source = _parse(parse_tree, tree_text or "", "--tree")

    out = fn(source)
    if isinstance(out, PlaneTree):
        click.echo(dump_tree_json(out) if as_json else format_tree(out))
    else:
        click.echo(json.dumps(path_to_json(out)) if as_json else format_path(out))


@cli.command()
@click.option("--multiset", "multiset_text", default=None, help='Degree multiset, e.g. "0:1,1:2" ("" is empty).')
@click.option("--first", type=click.IntRange(min=0), default=None, help="Degree of the first up-step.")
@click.option("--last", type=click.IntRange(min=0), default=None, help="Degree of the last up-step.")
@click.option("--profile", "profile_text", default=None, help='Exact profile, e.g. "1,0,2".')
@_log_level_option
def poly(
    multiset_text: Optional[str],
    first: Optional[int],
    last: Optional[int],
    profile_text: Optional[str],
    log_level: Optional[str],
) -> None:
    """Area/depth polynomial of a multiset (optionally constrained) or of a profile."""
    _setup_logging(log_level)
    if (multiset_text is None) == (profile_text is None):
        raise click.UsageError("give exactly one of --multiset or --profile")

    if profile_text is not None:
        if first is not None or last is not None:
            raise click.UsageError("--first/--last only apply to --multiset")
        result = c_tilde_profile(_parse(parse_profile, profile_text, "--profile"))
    else:
        result = c_tilde(_parse(parse_multiset, multiset_text or "", "--multiset"), first=first, last=last)

    _emit_json({"poly": poly_to_json(result), "text": format_poly(result), "symmetric": is_symmetric(result)})


@cli.command()
@click.option("--max-steps", type=int, default=None, help="Exhaustive bound on path length / tree size.")
@click.option("--series-order", type=int, default=None, help="Truncation order of the series check.")
@click.option("--series-degree", type=int, default=None, help="Largest marked degree of the series check.")
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="YAML file with a 'suite' section (defaults to the packaged config.yaml).",
)
@click.option("--progress", is_flag=True, help="Show progress on stderr.")
@_log_level_option
def verify(
    max_steps: Optional[int],
    series_order: Optional[int],
    series_degree: Optional[int],
    config_path: Optional[Path],
    progress: bool,
    log_level: Optional[str],
) -> None:
    """Run the full invariant suite and print the report."""
    _setup_logging(log_level)
    try:
        cfg = load_suite_config(
            config_path,
            {"max_steps": max_steps, "series_order": series_order, "series_degree": series_degree},
        )
    except ConfigError as e:
        raise click.UsageError(str(e)) from e

    report = verify_report(cfg, progress=progress)
    click.echo(report_to_json(report))
    failure = report.first_failure()
    if failure is not None:
        click.echo(f"check {failure.name} failed: {failure.counterexample}", err=True)
        sys.exit(1)


@cli.command()
@click.option("--order", type=click.IntRange(min=0), required=True, help="Largest multiset size N.")
@click.option("--max-degree", type=click.IntRange(min=0), required=True, help="Largest marked degree.")
@click.option("--check", is_flag=True, help="Compare every coefficient with the enumerated polynomial.")
@_log_level_option
def series(order: int, max_degree: int, check: bool, log_level: Optional[str]) -> None:
    """Truncated profile generating series from the root recursion."""
    _setup_logging(log_level)
    _emit_json(series_to_json(solve_F(order, max_degree)))
    if check:
        mismatches = verify_series(order, max_degree)
        if mismatches:
            m = mismatches[0]
            click.echo(
                f"{len(mismatches)} mismatches; first at {{{m.multiset}}}: "
                f"series {m.from_series}, enumeration {m.from_enumeration}",
                err=True,
            )
            sys.exit(1)


def main() -> None:
    cli()
