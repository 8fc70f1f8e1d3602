"""
lukas_qt: area and depth statistics on Łukasiewicz paths.

Public API (stable):
- parse_path / parse_tree / parse_multiset   (codecs)
- area, depth, profile                       (path statistics)
- path_to_tree, tree_to_path                 (contour bijections)
- mirror_involution, lodestar_involution     (area/depth exchanging involutions)
- QtPolynomial, c_tilde, c_tilde_profile     (refined polynomials)
- solve_F, verify_series                     (profile generating series)
- SuiteConfig, run_suite, CheckSinkPort      (verification suite)

Everything else is reachable through the subpackages.
"""

from __future__ import annotations

# Configuration
from .config import SuiteConfig, load_suite_config

# DTOs
from .dto import CheckResult, DegreeMultiset, LukasPath, PlaneTree, Step, VerifyReport

# Errors
from .errors import ConfigError, FormatError, InvalidPath, LukasError, TokenError

# Codecs
from .intake.codec import parse_multiset, parse_path, parse_profile, parse_tree

# Paths and trees
from .paths.statistics import area, depth, profile
from .trees.bijection import path_to_tree, tree_to_path
from .involutions import lodestar_involution, mirror_involution

# Polynomials and series
from .qt_poly import QtPolynomial, c_tilde, c_tilde_profile
from .series import solve_F, verify_series

# Orchestration
from .orchestration.runner import run_suite
from .ports import CheckSinkPort

__all__ = [
    "SuiteConfig",
    "load_suite_config",
    "CheckResult",
    "DegreeMultiset",
    "LukasPath",
    "PlaneTree",
    "Step",
    "VerifyReport",
    "ConfigError",
    "FormatError",
    "InvalidPath",
    "LukasError",
    "TokenError",
    "parse_multiset",
    "parse_path",
    "parse_profile",
    "parse_tree",
    "area",
    "depth",
    "profile",
    "path_to_tree",
    "tree_to_path",
    "lodestar_involution",
    "mirror_involution",
    "QtPolynomial",
    "c_tilde",
    "c_tilde_profile",
    "solve_F",
    "verify_series",
    "run_suite",
    "CheckSinkPort",
]
