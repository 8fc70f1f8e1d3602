"""
Data Transfer Objects (DTOs) shared by every lukas_qt module.

These are small and immutable so they can be hashed, cached and compared.
Validation of user input lives in `intake/`; constructors here only enforce
canonical form where equality depends on it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

# Degrees of up-steps, left to right.
Profile = Tuple[int, ...]
# One entry per up-step (area or depth values).
StatVector = Tuple[int, ...]
# 1-based child indices from the root; () addresses the root itself.
NodePath = Tuple[int, ...]

DOWN_DEGREE = -1


# === Steps and paths ===
@dataclass(frozen=True, order=True)
class Step:
    """
    One lattice step (1, degree). degree == -1 is the down-step D, degree k >= 0
    is the up-step U_k. Integer order gives D < U_0 < U_1 < ...
    """
    degree: int

    @property
    def is_down(self) -> bool:
        return self.degree == DOWN_DEGREE

    @classmethod
    def down(cls) -> "Step":
        return _DOWN

    @classmethod
    def up(cls, k: int) -> "Step":
        if k < 0:
            raise ValueError(f"up-step degree must be >= 0, got {k}")
        return cls(k)

    def __str__(self) -> str:
        return "D" if self.is_down else f"U{self.degree}"


_DOWN = Step(DOWN_DEGREE)


@dataclass(frozen=True, order=True)
class LukasPath:
    """
    A Łukasiewicz path. Build through `intake.validator.validate_steps` (or
    `parse_path`) when the steps come from outside the library.
    """
    steps: Tuple[Step, ...]

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "LukasPath":
        return cls(tuple(Step(int(d)) for d in degrees))

    @property
    def degrees(self) -> Tuple[int, ...]:
        """Steps as integers (-1 for D)."""
        return tuple(s.degree for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.steps)


# === Multisets of degrees ===
@dataclass(frozen=True)
class DegreeMultiset:
    """
    Finite multiset of nonnegative degrees stored canonically as
    ((k, M_k), ...) sorted by k with every M_k > 0.
    """
    items: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = -1
        for k, mult in self.items:
            if k < 0 or mult <= 0 or k <= prev:
                raise ValueError(f"non-canonical multiset items: {self.items!r}")
            prev = k

    # --- constructors ---

    @classmethod
    def of(cls, degrees: Iterable[int]) -> "DegreeMultiset":
        return cls.from_mapping(Counter(int(d) for d in degrees))

    @classmethod
    def from_mapping(cls, multiplicities: Mapping[int, int]) -> "DegreeMultiset":
        return cls(tuple(sorted((int(k), int(m)) for k, m in multiplicities.items() if m)))

    # --- queries ---

    def as_dict(self) -> Dict[int, int]:
        return dict(self.items)

    def multiplicity(self, k: int) -> int:
        return self.as_dict().get(k, 0)

    def size(self) -> int:
        """|M| counted with multiplicity."""
        return sum(m for _, m in self.items)

    def total(self) -> int:
        """Sum of the elements (number of down-steps minus one on any realizing path)."""
        return sum(k * m for k, m in self.items)

    def distinct(self) -> Tuple[int, ...]:
        return tuple(k for k, _ in self.items)

    def expand(self) -> Tuple[int, ...]:
        """Elements in nondecreasing order, repeated by multiplicity."""
        return tuple(k for k, m in self.items for _ in range(m))

    def __contains__(self, k: object) -> bool:
        return any(k == d for d, _ in self.items)

    def __len__(self) -> int:
        return self.size()

    # --- algebra ---

    def union(self, other: "DegreeMultiset") -> "DegreeMultiset":
        """M ⊎ L."""
        merged = Counter(self.as_dict())
        merged.update(other.as_dict())
        return DegreeMultiset.from_mapping(merged)

    def add(self, *degrees: int) -> "DegreeMultiset":
        return self.union(DegreeMultiset.of(degrees))

    def remove(self, k: int) -> "DegreeMultiset":
        """M ∖ {k}; k must be present."""
        counts = self.as_dict()
        if counts.get(k, 0) == 0:
            raise KeyError(k)
        counts[k] -= 1
        return DegreeMultiset.from_mapping(counts)

    def shift(self, by: int) -> "DegreeMultiset":
        return DegreeMultiset(tuple((k + by, m) for k, m in self.items))

    def __str__(self) -> str:
        return ",".join(f"{k}:{m}" for k, m in self.items)


# === Matching of down-steps to up-steps ===
@dataclass(frozen=True)
class Matching:
    """
    pairs[j] = (i, rank): down-step j is the rank-th matching down-step of
    up-step i. Indices are 1-based step positions; the final down-step is absent.
    """
    pairs: Mapping[int, Tuple[int, int]] = field(default_factory=dict)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return dict(self.pairs) == dict(other.pairs)

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.pairs.items())))

    def as_rows(self) -> Tuple[Tuple[int, int, int], ...]:
        """(down, up, rank) rows sorted by down-step index."""
        return tuple((j, i, rank) for j, (i, rank) in sorted(self.pairs.items()))


# === Plane trees ===
@dataclass(frozen=True)
class PlaneTree:
    """Rooted tree with ordered children; a node without children is a leaf."""
    children: Tuple["PlaneTree", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def degree(self) -> int:
        return len(self.children)

    @property
    def is_star(self) -> bool:
        """Internal node whose children are all leaves (a lodestar candidate)."""
        return bool(self.children) and all(not c.children for c in self.children)

    def __str__(self) -> str:
        from .intake.codec import format_tree

        return format_tree(self)


LEAF = PlaneTree()


# === Per-node thorn statistics ===
@dataclass(frozen=True)
class ThornProfile:
    """(lthorn, rthorn) for every internal node in preorder, plus totals."""
    per_node: Tuple[Tuple[int, int], ...]

    @property
    def lthorn(self) -> int:
        return sum(lt for lt, _ in self.per_node)

    @property
    def rthorn(self) -> int:
        return sum(rt for _, rt in self.per_node)

    @property
    def lthorn_vector(self) -> StatVector:
        return tuple(lt for lt, _ in self.per_node)

    @property
    def rthorn_vector(self) -> StatVector:
        return tuple(rt for _, rt in self.per_node)


@dataclass(frozen=True)
class Lodestars:
    left: NodePath
    right: NodePath

    @property
    def coincide(self) -> bool:
        return self.left == self.right


# === Verification results ===
@dataclass(frozen=True)
class CheckResult:
    name: str
    instances: int
    passed: bool
    counterexample: Optional[str] = None


@dataclass(frozen=True)
class VerifyReport:
    checks: Tuple[CheckResult, ...]
    metrics: Mapping[str, int] = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> Optional[CheckResult]:
        return next((c for c in self.checks if not c.passed), None)
