"""
Truncated profile generating series and the root-decomposition recursion.

F(z, q, t; p_0, p_1, ...) = sum over multisets M of z^|M| C~_M(q, t) prod p_k^{M_k}.
A ProfileSeries stores the coefficient of z^|M| prod p_k^{M_k} for every
|M| <= order and every entry <= max_degree.

Decomposing a tree at a root of degree k + 1 gives

    F = 1 + z * sum_{k=0}^{K_max} p_k * prod_{l=1}^{k+1} F(z q^{k+1-l} t^{l-1})

since every internal node below the l-th child of the root gains l - 1 left
thorns (depth, t) and k + 1 - l right thorns (area, q). The coefficients of
size m only depend on those of size < m, so solve_F fixes one order per round;
verify_series compares the result with the enumerated c_tilde polynomials.

Arithmetic runs on plain dictionaries keyed by multiplicity vectors
(M_0, ..., M_K) and exponent pairs; QtPolynomial values are built once per
coefficient when a ProfileSeries is returned.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import DefaultDict, Dict, Iterator, List, Mapping, Tuple

from .dto import DegreeMultiset
from .intake.codec import format_multiset
from .qt_poly import ONE, Exponents, QtPolynomial, c_tilde, poly_to_json

logger = logging.getLogger(__name__)

Counts = Tuple[int, ...]
RawPoly = Dict[Exponents, int]
RawSeries = Dict[Counts, RawPoly]


@dataclass(frozen=True)
class ProfileSeries:
    order: int
    max_degree: int
    coefficients: Mapping[DegreeMultiset, QtPolynomial] = field(default_factory=dict)

    def coefficient(self, multiset: DegreeMultiset) -> QtPolynomial:
        return self.coefficients.get(multiset, QtPolynomial())


@dataclass(frozen=True)
class SeriesMismatch:
    multiset: DegreeMultiset
    from_series: QtPolynomial
    from_enumeration: QtPolynomial


def series_one(order: int, max_degree: int) -> ProfileSeries:
    return ProfileSeries(order, max_degree, {DegreeMultiset(): ONE})


def _check_compatible(a: ProfileSeries, b: ProfileSeries) -> None:
    if (a.order, a.max_degree) != (b.order, b.max_degree):
        raise ValueError(
            f"series truncations differ: ({a.order}, {a.max_degree}) vs ({b.order}, {b.max_degree})"
        )


# --- raw arithmetic ------------------------------------------------------------


def _to_raw(a: ProfileSeries) -> RawSeries:
    raw: RawSeries = {}
    for multiset, poly in a.coefficients.items():
        counts = [0] * (a.max_degree + 1)
        for k, mult in multiset.items:
            if k > a.max_degree:
                raise ValueError(f"degree {k} outside 0..{a.max_degree}")
            counts[k] = mult
        raw[tuple(counts)] = poly.as_dict()
    return raw


def _from_raw(order: int, max_degree: int, raw: RawSeries) -> ProfileSeries:
    coefficients: Dict[DegreeMultiset, QtPolynomial] = {}
    for counts, terms in raw.items():
        poly = QtPolynomial.from_terms(terms)
        if poly:
            coefficients[DegreeMultiset.from_mapping(dict(enumerate(counts)))] = poly
    return ProfileSeries(order, max_degree, coefficients)


def _raw_unit(max_degree: int) -> RawSeries:
    return {(0,) * (max_degree + 1): {(0, 0): 1}}


def _raw_add_into(acc: RawSeries, counts: Counts, terms: RawPoly) -> None:
    bucket = acc.setdefault(counts, {})
    for exps, c in terms.items():
        bucket[exps] = bucket.get(exps, 0) + c


def _raw_mul(a: RawSeries, b: RawSeries, order: int) -> RawSeries:
    acc: DefaultDict[Counts, DefaultDict[Exponents, int]] = defaultdict(lambda: defaultdict(int))
    b_items = [(counts, sum(counts), list(terms.items())) for counts, terms in b.items()]
    for left, left_terms in a.items():
        budget = order - sum(left)
        if budget < 0:
            continue
        left_items = list(left_terms.items())
        for right, right_size, right_items in b_items:
            if right_size > budget:
                continue
            bucket = acc[tuple(x + y for x, y in zip(left, right))]
            for (aq, at), ac in left_items:
                for (bq, bt), bc in right_items:
                    bucket[(aq + bq, at + bt)] += ac * bc
    return {counts: dict(terms) for counts, terms in acc.items()}


def _raw_substitute(a: RawSeries, qe: int, te: int) -> RawSeries:
    out: RawSeries = {}
    for counts, terms in a.items():
        n = sum(counts)
        out[counts] = {(q + qe * n, t + te * n): c for (q, t), c in terms.items()}
    return out


def _raw_step(current: RawSeries, order: int, max_degree: int) -> RawSeries:
    nxt = _raw_unit(max_degree)
    for k in range(max_degree + 1):
        prod = _raw_unit(max_degree)
        for ell in range(1, k + 2):
            prod = _raw_mul(prod, _raw_substitute(current, k + 1 - ell, ell - 1), order - 1)
        for counts, terms in prod.items():
            if sum(counts) >= order:
                continue
            marked = counts[:k] + (counts[k] + 1,) + counts[k + 1 :]
            _raw_add_into(nxt, marked, terms)
    return nxt


# --- ProfileSeries operations ----------------------------------------------------


def series_add(a: ProfileSeries, b: ProfileSeries) -> ProfileSeries:
    _check_compatible(a, b)
    acc = _to_raw(a)
    for counts, terms in _to_raw(b).items():
        _raw_add_into(acc, counts, terms)
    return _from_raw(a.order, a.max_degree, acc)


def series_mul(a: ProfileSeries, b: ProfileSeries) -> ProfileSeries:
    """Cauchy product over splittings M = L ⊎ R, truncated at |M| <= order."""
    _check_compatible(a, b)
    return _from_raw(a.order, a.max_degree, _raw_mul(_to_raw(a), _to_raw(b), a.order))


def substitute_z(a: ProfileSeries, qe: int, te: int) -> ProfileSeries:
    """z -> z q^qe t^te: the coefficient at M gains q^(qe |M|) t^(te |M|)."""
    if qe < 0 or te < 0:
        raise ValueError("substitution exponents must be nonnegative")
    return _from_raw(a.order, a.max_degree, _raw_substitute(_to_raw(a), qe, te))


def shift_by_root(a: ProfileSeries, k: int) -> ProfileSeries:
    """Multiply by z p_k: the coefficient at M moves to M ⊎ {k}."""
    if not 0 <= k <= a.max_degree:
        raise ValueError(f"degree {k} outside 0..{a.max_degree}")
    return ProfileSeries(
        a.order,
        a.max_degree,
        {m.add(k): p for m, p in a.coefficients.items() if m.size() < a.order},
    )


def truncate(a: ProfileSeries, order: int) -> ProfileSeries:
    if order > a.order:
        raise ValueError(f"cannot raise truncation order {a.order} to {order}")
    return ProfileSeries(
        order, a.max_degree, {m: p for m, p in a.coefficients.items() if m.size() <= order}
    )


def recursion_step(current: ProfileSeries) -> ProfileSeries:
    """One application of F -> 1 + z sum_k p_k prod_l F(z q^{k+1-l} t^{l-1})."""
    raw = _raw_step(_to_raw(current), current.order, current.max_degree)
    return _from_raw(current.order, current.max_degree, raw)


@lru_cache(maxsize=32)
def solve_F(order: int, max_degree: int) -> ProfileSeries:
    """
    Fixed point of the recursion. Round r applies one step truncated at order r,
    which settles every coefficient of size r. The result is cached; treat it
    as read-only.
    """
    if order < 0 or max_degree < 0:
        raise ValueError("order and max_degree must be nonnegative")

    current = _raw_unit(max_degree)
    for round_order in range(1, order + 1):
        current = _raw_step(current, round_order, max_degree)
    logger.debug("series order=%d K=%d solved in %d rounds", order, max_degree, order)
    return _from_raw(order, max_degree, current)


def bounded_multisets(order: int, max_degree: int) -> Iterator[DegreeMultiset]:
    """Every multiset with at most `order` elements, all <= max_degree."""
    for size in range(order + 1):
        for degrees in combinations_with_replacement(range(max_degree + 1), size):
            yield DegreeMultiset.of(degrees)


def verify_series(order: int, max_degree: int) -> List[SeriesMismatch]:
    """Coefficients of solve_F that disagree with c_tilde; empty on success."""
    solved = solve_F(order, max_degree)
    mismatches: List[SeriesMismatch] = []
    for multiset in bounded_multisets(order, max_degree):
        got = solved.coefficient(multiset)
        expected = c_tilde(multiset)
        if got != expected:
            mismatches.append(SeriesMismatch(multiset, got, expected))
    return mismatches


def _json_order(item: Tuple[DegreeMultiset, QtPolynomial]) -> Tuple[int, str]:
    multiset, _ = item
    return (multiset.size(), str(multiset))


def series_to_json(a: ProfileSeries) -> List[Dict[str, object]]:
    return [
        {"multiset": format_multiset(m), "poly": poly_to_json(p)}
        for m, p in sorted(a.coefficients.items(), key=_json_order)
    ]
