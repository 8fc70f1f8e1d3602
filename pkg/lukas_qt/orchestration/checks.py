"""
The invariant checks run by `run_suite`.

Each check is a function of the shared Corpus (plus the suite config) and
returns a CheckResult. A Tally counts instances and keeps the first
counterexample; a check never raises for a failed instance.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Tuple

from ..config import SuiteConfig
from ..dto import CheckResult, DegreeMultiset, LukasPath, PlaneTree, Profile, Step
from ..intake.validator import is_valid
from ..involutions import lodestar_involution, mirror_involution
from ..paths.enumeration import (
    catalan_numbers,
    enumerate_by_length,
    enumerate_by_multiset,
    enumerate_by_profile,
)
from ..paths.matching import match_downs, match_downs_by_ray
from ..paths.statistics import (
    area,
    area_vector,
    depth,
    depth_vector,
    first_degree,
    last_degree,
    profile,
    profile_multiset,
)
from ..qt_poly import (
    ONE,
    c_tilde,
    c_tilde_profile,
    evaluate,
    format_poly,
    is_symmetric,
    monomial,
    total,
)
from ..series import bounded_multisets, recursion_step, solve_F, truncate, verify_series
from ..trees.bijection import path_to_tree, tree_to_path
from ..trees.enumeration import enumerate_trees
from ..trees.lodestar import find_lodestars, lodestar_swap, with_star_degree
from ..trees.structure import internal_degree_multiset, mirror, preorder_internal
from ..trees.thorns import thorns


# === Corpus ===
@dataclass
class Corpus:
    """Every path with <= max_steps steps and every tree with <= max_steps nodes."""

    paths: List[LukasPath] = field(default_factory=list)
    trees: List[PlaneTree] = field(default_factory=list)
    paths_by_length: Dict[int, int] = field(default_factory=dict)
    trees_by_size: Dict[int, int] = field(default_factory=dict)
    by_multiset: Dict[DegreeMultiset, List[LukasPath]] = field(default_factory=dict)
    by_profile: Dict[Profile, List[LukasPath]] = field(default_factory=dict)


def build_corpus(max_steps: int) -> Corpus:
    corpus = Corpus()
    by_multiset: Dict[DegreeMultiset, List[LukasPath]] = defaultdict(list)
    by_profile: Dict[Profile, List[LukasPath]] = defaultdict(list)
    for n in range(1, max_steps + 1):
        paths = list(enumerate_by_length(n))
        trees = list(enumerate_trees(n))
        corpus.paths_by_length[n] = len(paths)
        corpus.trees_by_size[n] = len(trees)
        corpus.paths.extend(paths)
        corpus.trees.extend(trees)
        for path in paths:
            by_multiset[profile_multiset(path)].append(path)
            by_profile[profile(path)].append(path)
    corpus.by_multiset = dict(by_multiset)
    corpus.by_profile = dict(by_profile)
    return corpus


# === Tally ===
class Tally:
    """Counts instances; remembers the first failing one."""

    def __init__(self, name: str) -> None:
        self.name = name
        self.instances = 0
        self.counterexample: Optional[str] = None

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.instances += 1
        if not ok and self.counterexample is None:
            self.counterexample = describe()

    def result(self) -> CheckResult:
        return CheckResult(
            name=self.name,
            instances=self.instances,
            passed=self.counterexample is None,
            counterexample=self.counterexample,
        )


CheckFn = Callable[[Corpus, SuiteConfig], CheckResult]


# === Paths ===
def check_enumeration_consistency(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    """
    Per multiset, enumerate_by_multiset yields exactly the corpus paths with
    that multiset and in the same (lexicographic) order. Every corpus path has
    1 + sum(profile) down-steps and statistic vectors as long as its profile.
    """
    tally = Tally("enumeration_consistency")
    for path in corpus.paths:
        prof = profile(path)
        downs = sum(1 for s in path.steps if s.is_down)
        ok = (
            is_valid(path.steps)
            and downs == 1 + sum(prof)
            and len(area_vector(path)) == len(prof) == len(depth_vector(path))
            and (not prof or area_vector(path)[0] == 0 == depth_vector(path)[0])
        )
        tally.record(ok, lambda: f"path {path}")
    for multiset, expected in corpus.by_multiset.items():
        got = list(enumerate_by_multiset(multiset))
        tally.record(
            got == expected,
            lambda: f"{_label(multiset)}: enumerated {len(got)} paths, corpus has {len(expected)}",
        )
    return tally.result()


def _brute_force_profile(prof: Profile) -> List[LukasPath]:
    """Filter every placement of the up-steps of `prof` among the first n - 1 positions."""
    n = len(prof) + sum(prof) + 1
    found: List[LukasPath] = []
    for positions in combinations(range(n - 1), len(prof)):
        degrees = [-1] * n
        for pos, k in zip(positions, prof):
            degrees[pos] = k
        steps = [Step(d) for d in degrees]
        if is_valid(steps):
            found.append(LukasPath(tuple(steps)))
    return sorted(found)


def check_brute_force_profiles(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    tally = Tally("brute_force_profiles")
    for prof in corpus.by_profile:
        if len(prof) + sum(prof) + 1 > cfg.brute_force_max_steps:
            continue
        got = list(enumerate_by_profile(prof))
        expected = _brute_force_profile(prof)
        tally.record(got == expected, lambda: f"profile {prof}: {len(got)} enumerated, {len(expected)} by filter")
    return tally.result()


def check_matching_equivalence(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    tally = Tally("matching_equivalence")
    for path in corpus.paths:
        tally.record(match_downs(path) == match_downs_by_ray(path), lambda: f"path {path}")
    return tally.result()


# === Trees ===
def check_bijection_round_trip(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    tally = Tally("bijection_round_trip")
    for path in corpus.paths:
        tally.record(tree_to_path(path_to_tree(path)) == path, lambda: f"path {path}")
    for tree in corpus.trees:
        tally.record(path_to_tree(tree_to_path(tree)) == tree, lambda: f"tree {tree}")
    return tally.result()


def check_statistic_transfer(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    """Area entrywise equals rthorn, depth equals lthorn, degrees shift by one."""
    tally = Tally("statistic_transfer")
    for path in corpus.paths:
        tree = path_to_tree(path)
        thorn = thorns(tree)
        ok = (
            area_vector(path) == thorn.rthorn_vector
            and depth_vector(path) == thorn.lthorn_vector
            and internal_degree_multiset(tree) == profile_multiset(path).shift(1)
        )
        tally.record(ok, lambda: f"path {path}")
    return tally.result()


def check_mirror_exchange(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    tally = Tally("mirror_exchange")
    for tree in corpus.trees:
        before = thorns(tree)
        reflected = mirror(tree)
        after = thorns(reflected)
        ok = (
            before.lthorn == after.rthorn
            and before.rthorn == after.lthorn
            and mirror(reflected) == tree
        )
        tally.record(ok, lambda: f"tree {tree}")
    return tally.result()


def check_lodestar_swap(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    tally = Tally("lodestar_swap")
    for tree in corpus.trees:
        before = thorns(tree)
        swapped = lodestar_swap(tree)
        after = thorns(swapped)
        ok = (
            (before.lthorn, before.rthorn) == (after.lthorn, after.rthorn)
            and internal_degree_multiset(swapped) == internal_degree_multiset(tree)
            and lodestar_swap(swapped) == tree
        )
        tally.record(ok, lambda: f"tree {tree}")
    return tally.result()


def check_lodestar_degree_irrelevance(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    """Resizing the right lodestar leaves every per-node thorn pair unchanged."""
    tally = Tally("lodestar_degree_irrelevance")
    for tree in corpus.trees:
        stars = find_lodestars(tree)
        if stars is None:
            continue
        baseline = thorns(tree).per_node
        for c in range(1, cfg.lodestar_probe_degree + 1):
            resized = with_star_degree(tree, stars.right, c)
            tally.record(
                thorns(resized).per_node == baseline,
                lambda: f"tree {tree} with right lodestar resized to {c}",
            )
    return tally.result()


def check_root_lodestar(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    tally = Tally("root_lodestar")
    for tree in corpus.trees:
        stars = find_lodestars(tree)
        if stars is None:
            continue
        root_is_star = stars.left == () or stars.right == ()
        single = len(preorder_internal(tree)) == 1
        tally.record(root_is_star == single and (not single or stars.coincide), lambda: f"tree {tree}")
    return tally.result()


# === Involutions ===
def _check_involution(
    name: str, fn: Callable[[LukasPath], LukasPath], corpus: Corpus, keep_last: bool
) -> CheckResult:
    tally = Tally(name)
    for path in corpus.paths:
        image = fn(path)
        ok = (
            is_valid(image.steps)
            and fn(image) == path
            and area(image) == depth(path)
            and depth(image) == area(path)
            and first_degree(image) == first_degree(path)
            and profile_multiset(image) == profile_multiset(path)
            and (not keep_last or last_degree(image) == last_degree(path))
        )
        tally.record(ok, lambda: f"path {path} -> {image}")
    return tally.result()


def check_mirror_involution(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    return _check_involution("mirror_involution", mirror_involution, corpus, keep_last=False)


def check_lodestar_involution(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    return _check_involution("lodestar_involution", lodestar_involution, corpus, keep_last=True)


# === Symmetry of the refined polynomials ===
def _label(multiset: DegreeMultiset, first: Optional[int] = None, last: Optional[int] = None) -> str:
    parts = [f"M={{{multiset}}}"]
    if first is not None:
        parts.append(f"first={first}")
    if last is not None:
        parts.append(f"last={last}")
    return " ".join(parts)


def check_symmetry_unconstrained(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    tally = Tally("symmetry_unconstrained")
    for multiset in corpus.by_multiset:
        poly = c_tilde(multiset)
        tally.record(is_symmetric(poly), lambda: f"{_label(multiset)}: {format_poly(poly)}")
    return tally.result()


def check_symmetry_first(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    tally = Tally("symmetry_first")
    for full in corpus.by_multiset:
        for a in full.distinct():
            rest = full.remove(a)
            poly = c_tilde(rest, first=a)
            tally.record(is_symmetric(poly), lambda: f"{_label(rest, first=a)}: {format_poly(poly)}")
    return tally.result()


def _first_last_splits(full: DegreeMultiset) -> List[Tuple[int, DegreeMultiset, int]]:
    """(a, M, b) with M ⊎ {a, b} = full."""
    out: List[Tuple[int, DegreeMultiset, int]] = []
    for a in full.distinct():
        without_a = full.remove(a)
        for b in without_a.distinct():
            out.append((a, without_a.remove(b), b))
    return out


def check_symmetry_first_last(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    tally = Tally("symmetry_first_last")
    for full in corpus.by_multiset:
        for a, rest, b in _first_last_splits(full):
            poly = c_tilde(rest, first=a, last=b)
            tally.record(is_symmetric(poly), lambda: f"{_label(rest, a, b)}: {format_poly(poly)}")
    return tally.result()


def check_symmetry_last(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    """
    Symmetry of C~_{M,b}, and its decomposition over the first up-step degree
    whenever M is nonempty (a single up-step path has no separate first step).
    """
    tally = Tally("symmetry_last")
    for full in corpus.by_multiset:
        for b in full.distinct():
            rest = full.remove(b)
            poly = c_tilde(rest, last=b)
            tally.record(is_symmetric(poly), lambda: f"{_label(rest, last=b)}: {format_poly(poly)}")
            if rest.size() == 0:
                continue
            parts = total(c_tilde(rest.remove(a), first=a, last=b) for a in rest.distinct())
            tally.record(
                parts == poly,
                lambda: f"{_label(rest, last=b)}: {format_poly(poly)} != decomposition {format_poly(parts)}",
            )
    return tally.result()


# === Pinned values and counting ===
_PINNED: Tuple[Tuple[str, Callable[[], object], object], ...] = (
    ("C~{}", lambda: c_tilde(DegreeMultiset()), ONE),
    ("C~{1:2}", lambda: c_tilde(DegreeMultiset.of([1, 1])), total([monomial(1, 0), monomial(0, 1)])),
    (
        "C~{1:3}",
        lambda: c_tilde(DegreeMultiset.of([1, 1, 1])),
        total([monomial(3, 0), monomial(2, 1), monomial(1, 2), monomial(1, 1), monomial(0, 3)]),
    ),
    ("C~{0:1,1:1}", lambda: c_tilde(DegreeMultiset.of([0, 1])), total([ONE, monomial(1, 0), monomial(0, 1)])),
    (
        "C~_{1,{},1}",
        lambda: c_tilde(DegreeMultiset(), first=1, last=1),
        total([monomial(1, 0), monomial(0, 1)]),
    ),
    ("C~_K for K=()", lambda: c_tilde_profile(()), ONE),
    ("C~_K for K=(1,1)", lambda: c_tilde_profile((1, 1)), total([monomial(1, 0), monomial(0, 1)])),
    ("C~_K for K=(0,1)", lambda: c_tilde_profile((0, 1)), ONE),
)


def check_pinned_values(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    tally = Tally("pinned_values")
    for label, compute, expected in _PINNED:
        got = compute()
        tally.record(got == expected, lambda: f"{label} = {got}, expected {expected}")
    return tally.result()


def check_catalan_counts(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    """|L_{1^n}| = C_n, and C_{n-1} paths of length n and trees with n nodes."""
    tally = Tally("catalan_counts")
    cat = catalan_numbers(max(cfg.catalan_max, cfg.max_steps))
    for n in range(cfg.catalan_max + 1):
        count = sum(1 for _ in enumerate_by_multiset(DegreeMultiset.of([1] * n)))
        tally.record(count == cat[n], lambda: f"|L_{{1:{n}}}| = {count}, expected {cat[n]}")
    for n, count in corpus.paths_by_length.items():
        tally.record(count == cat[n - 1], lambda: f"{count} paths of length {n}, expected {cat[n - 1]}")
    for n, count in corpus.trees_by_size.items():
        tally.record(count == cat[n - 1], lambda: f"{count} trees with {n} nodes, expected {cat[n - 1]}")
    return tally.result()


def check_evaluation_counts(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    tally = Tally("evaluation_counts")
    for multiset, paths in corpus.by_multiset.items():
        value = evaluate(c_tilde(multiset), 1, 1)
        tally.record(value == len(paths), lambda: f"{_label(multiset)}: C~(1,1) = {value}, |L_M| = {len(paths)}")
    return tally.result()


# === Profile polynomials ===
def _bounded_profiles(length: int, max_entry: int) -> List[Profile]:
    return [tuple(p) for p in product(range(max_entry + 1), repeat=length)]


def check_profile_last_degree(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    """C~_{K.(a)} does not depend on a."""
    tally = Tally("profile_last_degree")
    for length in range(cfg.profile_max_length + 1):
        for prefix in _bounded_profiles(length, cfg.profile_max_entry):
            reference = c_tilde_profile(prefix + (0,))
            for a in range(1, cfg.profile_max_entry + 1):
                poly = c_tilde_profile(prefix + (a,))
                tally.record(
                    poly == reference,
                    lambda: f"K={prefix}: last degree {a} gives {poly}, last degree 0 gives {reference}",
                )
    return tally.result()


def check_profile_length_three(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    """
    With three internal nodes the lodestar involution keeps the profile itself,
    so C~_K is symmetric for every K of length 3.
    """
    tally = Tally("profile_length_three")
    for prof in _bounded_profiles(3, cfg.profile_max_entry):
        for path in enumerate_by_profile(prof):
            image = lodestar_involution(path)
            tally.record(profile(image) == prof, lambda: f"K={prof}: path {path} -> {image}")
        poly = c_tilde_profile(prof)
        tally.record(is_symmetric(poly), lambda: f"K={prof}: {poly}")
    return tally.result()


# === Generating series ===
def check_series_reconciliation(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    tally = Tally("series_reconciliation")
    mismatches = verify_series(cfg.series_order, cfg.series_degree)
    tally.instances = sum(1 for _ in bounded_multisets(cfg.series_order, cfg.series_degree))
    if mismatches:
        m = mismatches[0]
        tally.counterexample = (
            f"{_label(m.multiset)}: series {m.from_series}, enumeration {m.from_enumeration}"
        )
    return tally.result()


def check_series_truncation(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    tally = Tally("series_truncation")
    full = solve_F(cfg.series_order, cfg.series_degree)
    for order in range(cfg.series_order + 1):
        tally.record(
            truncate(full, order) == solve_F(order, cfg.series_degree),
            lambda: f"truncation to order {order} differs from solving at order {order}",
        )
    return tally.result()


def check_series_stationary(corpus: Corpus, cfg: SuiteConfig) -> CheckResult:
    tally = Tally("series_stationary")
    solved = solve_F(cfg.series_order, cfg.series_degree)
    tally.record(
        recursion_step(solved) == solved,
        lambda: f"one more recursion step changes the series at order {cfg.series_order}",
    )
    return tally.result()


# Fixed run order.
CHECKS: Tuple[Tuple[str, CheckFn], ...] = (
    ("enumeration_consistency", check_enumeration_consistency),
    ("brute_force_profiles", check_brute_force_profiles),
    ("bijection_round_trip", check_bijection_round_trip),
    ("statistic_transfer", check_statistic_transfer),
    ("matching_equivalence", check_matching_equivalence),
    ("mirror_exchange", check_mirror_exchange),
    ("lodestar_swap", check_lodestar_swap),
    ("lodestar_degree_irrelevance", check_lodestar_degree_irrelevance),
    ("root_lodestar", check_root_lodestar),
    ("mirror_involution", check_mirror_involution),
    ("lodestar_involution", check_lodestar_involution),
    ("symmetry_unconstrained", check_symmetry_unconstrained),
    ("symmetry_first", check_symmetry_first),
    ("symmetry_first_last", check_symmetry_first_last),
    ("symmetry_last", check_symmetry_last),
    ("pinned_values", check_pinned_values),
    ("catalan_counts", check_catalan_counts),
    ("evaluation_counts", check_evaluation_counts),
    ("profile_last_degree", check_profile_last_degree),
    ("profile_length_three", check_profile_length_three),
    ("series_reconciliation", check_series_reconciliation),
    ("series_truncation", check_series_truncation),
    ("series_stationary", check_series_stationary),
)
