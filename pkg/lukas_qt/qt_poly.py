"""
Exact sparse polynomials in q, t and the area/depth polynomials built on them.

QtPolynomial keeps (q-exponent, t-exponent) -> coefficient with no zero
coefficients, in canonical order: q-exponent descending, then t-exponent
ascending. Coefficients are Python ints, so arithmetic never overflows.

The refined polynomials are computed by enumeration, never through the
involutions, so the involutions remain an independent cross-check:

- c_tilde(M, first=a, last=b) = sum over L_{a,M,b} (and variants) of q^area t^depth
- c_tilde_profile(K)          = sum over paths with profile K
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .dto import DegreeMultiset, LukasPath
from .paths.enumeration import constrained_multiset, enumerate_by_profile, profiles_of
from .paths.statistics import area, depth

Exponents = Tuple[int, int]


def _canonical_key(item: Tuple[Exponents, int]) -> Tuple[int, int]:
    (qe, te), _ = item
    return (-qe, te)


@dataclass(frozen=True)
class QtPolynomial:
    terms: Tuple[Tuple[Exponents, int], ...] = ()

    @classmethod
    def from_terms(cls, terms: Mapping[Exponents, int]) -> "QtPolynomial":
        for (qe, te), c in terms.items():
            if qe < 0 or te < 0:
                raise ValueError(f"negative exponent in term q^{qe} t^{te}")
            if c < 0:
                raise ValueError(f"negative coefficient {c}")
        kept = ((exps, int(c)) for exps, c in terms.items() if c)
        return cls(tuple(sorted(kept, key=_canonical_key)))

    def as_dict(self) -> Dict[Exponents, int]:
        return dict(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "QtPolynomial") -> "QtPolynomial":
        return add(self, other)

    def __mul__(self, other: "QtPolynomial") -> "QtPolynomial":
        return mul(self, other)

    def __str__(self) -> str:
        return format_poly(self)


ZERO = QtPolynomial()
ONE = QtPolynomial((((0, 0), 1),))


def monomial(qe: int, te: int, coeff: int = 1) -> QtPolynomial:
    return QtPolynomial.from_terms({(qe, te): coeff})


def add(a: QtPolynomial, b: QtPolynomial) -> QtPolynomial:
    acc: Dict[Exponents, int] = defaultdict(int, a.as_dict())
    for exps, c in b.terms:
        acc[exps] += c
    return QtPolynomial.from_terms(acc)


def mul(a: QtPolynomial, b: QtPolynomial) -> QtPolynomial:
    acc: Dict[Exponents, int] = defaultdict(int)
    for (aq, at), ac in a.terms:
        for (bq, bt), bc in b.terms:
            acc[(aq + bq, at + bt)] += ac * bc
    return QtPolynomial.from_terms(acc)


def mono_mul(a: QtPolynomial, qe: int, te: int) -> QtPolynomial:
    """a * q^qe * t^te."""
    if qe < 0 or te < 0:
        raise ValueError("monomial exponents must be nonnegative")
    return QtPolynomial.from_terms({(q + qe, t + te): c for (q, t), c in a.terms})


def swap_qt(a: QtPolynomial) -> QtPolynomial:
    return QtPolynomial.from_terms({(t, q): c for (q, t), c in a.terms})


def is_symmetric(a: QtPolynomial) -> bool:
    return swap_qt(a) == a


def evaluate(a: QtPolynomial, q: int, t: int) -> int:
    return sum(c * q**qe * t**te for (qe, te), c in a.terms)


def total(polys: Iterable[QtPolynomial]) -> QtPolynomial:
    acc: Dict[Exponents, int] = defaultdict(int)
    for p in polys:
        for exps, c in p.terms:
            acc[exps] += c
    return QtPolynomial.from_terms(acc)


# === Area/depth generating polynomials ===


def area_depth_sum(paths: Iterable[LukasPath]) -> QtPolynomial:
    """Sum of q^area(P) t^depth(P) over `paths`."""
    acc: Dict[Exponents, int] = defaultdict(int)
    for path in paths:
        acc[(area(path), depth(path))] += 1
    return QtPolynomial.from_terms(acc)


@lru_cache(maxsize=8192)
def c_tilde(
    multiset: DegreeMultiset, first: Optional[int] = None, last: Optional[int] = None
) -> QtPolynomial:
    """
    C~_M, C~_{a,M}, C~_{M,b} or C~_{a,M,b} depending on which constraints are
    given: the sum of c_tilde_profile over every admissible profile.
    """
    full = constrained_multiset(multiset, first=first, last=last)
    return total(_c_tilde_profile(k) for k in profiles_of(full, first=first, last=last))


def c_tilde_profile(profile: Sequence[int]) -> QtPolynomial:
    return _c_tilde_profile(tuple(profile))


@lru_cache(maxsize=16384)
def _c_tilde_profile(profile: Tuple[int, ...]) -> QtPolynomial:
    return area_depth_sum(enumerate_by_profile(profile))


# === Codecs ===


def format_poly(a: QtPolynomial) -> str:
    """Terms "c*q^a*t^b" joined by " + "; "^1" and a unit coefficient are omitted."""
    if not a.terms:
        return "0"
    rendered: List[str] = []
    for (qe, te), c in a.terms:
        parts: List[str] = []
        if c != 1 or (qe == 0 and te == 0):
            parts.append(str(c))
        if qe:
            parts.append("q" if qe == 1 else f"q^{qe}")
        if te:
            parts.append("t" if te == 1 else f"t^{te}")
        rendered.append("*".join(parts))
    return " + ".join(rendered)


def poly_to_json(a: QtPolynomial) -> List[Dict[str, object]]:
    """Canonical-order array of {"q", "t", "c"}; "c" is a decimal string."""
    return [{"q": qe, "t": te, "c": str(c)} for (qe, te), c in a.terms]

