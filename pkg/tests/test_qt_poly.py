from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given

from lukas_qt.dto import DegreeMultiset
from lukas_qt.involutions import lodestar_involution
from lukas_qt.paths.enumeration import enumerate_by_multiset, enumerate_by_profile
from lukas_qt.paths.statistics import profile
from lukas_qt.qt_poly import (
    ONE,
    ZERO,
    QtPolynomial,
    add,
    area_depth_sum,
    c_tilde,
    c_tilde_profile,
    evaluate,
    format_poly,
    is_symmetric,
    mono_mul,
    monomial,
    mul,
    poly_to_json,
    swap_qt,
    total,
)

from .strategies import multisets

q = monomial(1, 0)
t = monomial(0, 1)


def M(*degrees: int) -> DegreeMultiset:
    return DegreeMultiset.of(degrees)


# --- ring operations ----------------------------------------------------------


def test_ring_examples():
    assert add(q, t) == q + t
    assert format_poly(q + t) == "q + t"
    assert mul(q + t, ONE) == q + t
    assert mono_mul(q + t, 1, 1) == monomial(2, 1) + monomial(1, 2)
    assert (q + t) * (q + t) == monomial(2, 0) + monomial(1, 1, 2) + monomial(0, 2)
    assert mul(q, ZERO) == ZERO
    assert not ZERO


def test_canonical_order():
    poly = total([ONE, t, q, monomial(1, 1), monomial(0, 3)])
    assert [exps for exps, _ in poly.terms] == [(1, 0), (1, 1), (0, 0), (0, 1), (0, 3)]
    assert QtPolynomial.from_terms({(0, 0): 0}) == ZERO


def test_from_terms_rejects_negatives():
    with pytest.raises(ValueError):
        QtPolynomial.from_terms({(-1, 0): 1})
    with pytest.raises(ValueError):
        QtPolynomial.from_terms({(0, 0): -1})
    with pytest.raises(ValueError):
        mono_mul(q, -1, 0)


def test_swap_and_symmetry():
    assert swap_qt(monomial(2, 0) + t) == monomial(0, 2) + q
    assert is_symmetric(q + t)
    assert not is_symmetric(monomial(2, 0) + t)
    assert is_symmetric(ZERO)


def test_evaluate_is_exact():
    assert evaluate(q + t + ONE, 1, 1) == 3
    assert evaluate(monomial(2, 1, 5), 2, 3) == 60
    assert evaluate(monomial(200, 0), 2, 1) == 2**200


# --- text and JSON ------------------------------------------------------------


@pytest.mark.parametrize(
    "poly, text",
    [
        (ZERO, "0"),
        (ONE, "1"),
        (monomial(0, 0, 7), "7"),
        (monomial(3, 0) + monomial(2, 1) + monomial(1, 2) + monomial(1, 1) + monomial(0, 3),
         "q^3 + q^2*t + q*t + q*t^2 + t^3"),
        (total([ONE, q, t]), "q + 1 + t"),
        (monomial(2, 3, 4), "4*q^2*t^3"),
    ],
)
def test_format_poly(poly, text):
    assert format_poly(poly) == text
    assert str(poly) == text


def test_poly_json():
    poly = total([ONE, q, monomial(1, 1, 12)])
    raw = poly_to_json(poly)
    assert raw == [{"q": 1, "t": 0, "c": "1"}, {"q": 1, "t": 1, "c": "12"}, {"q": 0, "t": 0, "c": "1"}]


# --- refined polynomials ------------------------------------------------------


def test_pinned_values():
    assert c_tilde(M()) == ONE
    assert c_tilde(M(1, 1)) == q + t
    assert c_tilde(M(1, 1, 1)) == monomial(3, 0) + monomial(2, 1) + monomial(1, 2) + monomial(1, 1) + monomial(0, 3)
    assert c_tilde(M(0, 1)) == ONE + q + t
    assert c_tilde(M(), first=1, last=1) == q + t


def test_profile_values():
    assert c_tilde_profile(()) == ONE
    assert c_tilde_profile((1, 1)) == q + t
    assert c_tilde_profile([0, 1]) == ONE


def test_area_depth_sum_of_nothing_is_zero():
    assert area_depth_sum([]) == ZERO


@given(multisets)
def test_symmetry_unconstrained(multiset):
    assert is_symmetric(c_tilde(multiset))


@given(multisets)
def test_symmetry_with_first_degree(multiset):
    for a in range(3):
        assert is_symmetric(c_tilde(multiset, first=a))


@given(multisets)
def test_symmetry_with_first_and_last_degree(multiset):
    for a, b in product(range(3), repeat=2):
        assert is_symmetric(c_tilde(multiset, first=a, last=b))


@given(multisets)
def test_last_degree_decomposes_over_first_degree(multiset):
    for b in range(3):
        poly = c_tilde(multiset, last=b)
        assert is_symmetric(poly)
        if multiset.size():
            parts = total(c_tilde(multiset.remove(a), first=a, last=b) for a in multiset.distinct())
            assert parts == poly


@given(multisets)
def test_evaluation_counts_paths(multiset):
    count = sum(1 for _ in enumerate_by_multiset(multiset))
    assert evaluate(c_tilde(multiset), 1, 1) == count


@given(multisets)
def test_c_tilde_equals_sum_over_enumerated_paths(multiset):
    assert c_tilde(multiset) == area_depth_sum(enumerate_by_multiset(multiset))
    for a, b in product(range(3), repeat=2):
        assert c_tilde(multiset, first=a, last=b) == area_depth_sum(
            enumerate_by_multiset(multiset, first=a, last=b)
        )


def test_c_tilde_of_a_single_large_degree():
    # one path: U_k followed by k + 1 down-steps
    assert c_tilde(M(1200)) == ONE
    assert c_tilde_profile((1100,)) == ONE


@pytest.mark.parametrize("prefix", [(), (1,), (2, 0), (0, 2, 1), (3, 1, 2, 0)])
def test_profile_polynomial_ignores_last_degree(prefix):
    reference = c_tilde_profile(prefix + (0,))
    for a in range(1, 4):
        assert c_tilde_profile(prefix + (a,)) == reference


def test_length_three_profiles_are_symmetric():
    for prof in product(range(4), repeat=3):
        assert is_symmetric(c_tilde_profile(prof))


def test_length_three_profiles_are_kept_by_lodestar_involution():
    for prof in product(range(4), repeat=3):
        for path in enumerate_by_profile(prof):
            assert profile(lodestar_involution(path)) == prof
