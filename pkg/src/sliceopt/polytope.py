"""Bounded rational polytopes and exact integer-point queries.

Feasibility and enumeration are desk-scale stand-ins for fixed-dimension
integer-programming oracles: exact scans over the polytope's integer
bounding box, with the same input/output contract, guarded by a cell
budget.  All membership tests are exact (integer or rational arithmetic).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import _lp
from ._hull import hull_vertices

DEFAULT_CELL_BUDGET = 10**7


class BudgetExceededError(Exception):
    """The integer bounding box exceeds the configured enumeration budget."""


class Polytope:
    """{x : A x <= b} with integer data, verified bounded at construction."""

    __slots__ = ("n", "a_rows", "b", "vertices", "real_box", "box")

    def __init__(self, a_rows, b) -> None:
        self.a_rows = tuple(tuple(int(v) for v in row) for row in a_rows)
        self.b = tuple(int(v) for v in b)
        if len(self.a_rows) != len(self.b):
            raise ValueError("row/rhs count mismatch")
        if not self.a_rows:
            raise ValueError("empty constraint system cannot be bounded")
        self.n = len(self.a_rows[0])
        if any(len(row) != self.n for row in self.a_rows):
            raise ValueError("inconsistent row widths")
        if not _lp.recession_cone_is_trivial(self.a_rows, self.n):
            raise ValueError("polytope is unbounded")
        self.vertices = tuple(_lp.basic_vertices(self.a_rows, list(self.b), self.n))
        if self.vertices:
            self.real_box = tuple(
                (min(v[i] for v in self.vertices), max(v[i] for v in self.vertices))
                for i in range(self.n)
            )
            self.box = tuple(
                (int(math.ceil(lo)), int(math.floor(hi))) for lo, hi in self.real_box
            )
        else:  # bounded and vertex-free means empty
            self.real_box = tuple((Fraction(0), Fraction(-1)) for _ in range(self.n))
            self.box = tuple((0, -1) for _ in range(self.n))

    @classmethod
    def from_box(cls, bounds) -> "Polytope":
        """Axis-aligned box from [(lo, hi), ...]."""
        n = len(bounds)
        rows, rhs = [], []
        for i, (lo, hi) in enumerate(bounds):
            rows.append(tuple(1 if j == i else 0 for j in range(n)))
            rhs.append(int(hi))
            rows.append(tuple(-1 if j == i else 0 for j in range(n)))
            rhs.append(-int(lo))
        return cls(rows, rhs)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def contains(self, x) -> bool:
        return all(
            sum(c * v for c, v in zip(row, x)) <= rhs
            for row, rhs in zip(self.a_rows, self.b)
        )

    def __repr__(self) -> str:
        return f"Polytope(n={self.n}, m={len(self.a_rows)})"


@dataclass(frozen=True)
class LinearConstraint:
    """coeffs . x + offset  REL  0 with REL in {'<=', '==', '>='}."""

    coeffs: tuple[int, ...]
    offset: int
    rel: str = "<="

    def __post_init__(self) -> None:
        if self.rel not in ("<=", "==", ">="):
            raise ValueError(f"bad relation {self.rel!r}")

    def satisfied(self, x) -> bool:
        v = sum(c * xi for c, xi in zip(self.coeffs, x)) + self.offset
        if self.rel == "<=":
            return v <= 0
        if self.rel == ">=":
            return v >= 0
        return v == 0

    @classmethod
    def from_bound(cls, coeffs, offset, bound: Fraction, rel: str):
        """coeffs . x + offset REL bound, cleared to integer data."""
        den = bound.denominator
        return cls(
            tuple(den * c for c in coeffs),
            den * offset - bound.numerator,
            rel,
        )


@dataclass(frozen=True)
class SocConstraint:
    """The squared second-order-cone membership test

        |d_n| * sum_{i<n} d_i (form_i . x)^2 <= (beta + |d_n| form_n . x)^2
        beta + |d_n| form_n . x >= 0

    with d_1..d_{n-1} >= 0, d_n < 0, rational beta.  Evaluated exactly.
    """

    d: tuple[int, ...]
    forms: tuple[tuple[int, ...], ...]
    beta: Fraction

    def satisfied(self, x) -> bool:
        dn = -self.d[-1]
        if dn <= 0:
            raise ValueError("last diagonal entry must be negative")
        lhs = dn * sum(
            self.d[i] * sum(c * v for c, v in zip(self.forms[i], x)) ** 2
            for i in range(len(self.d) - 1)
        )
        t = dn * sum(c * v for c, v in zip(self.forms[-1], x))
        bn, bd = self.beta.numerator, self.beta.denominator
        affine = bn + bd * t
        return affine >= 0 and lhs * bd * bd <= affine * affine


@dataclass(frozen=True)
class Region:
    """Intersection of a base polytope with extra linear constraints and an
    optional second-order-cone constraint."""

    base: Polytope
    extra: tuple[LinearConstraint, ...] = ()
    soc: SocConstraint | None = None

    def contains(self, x) -> bool:
        if not self.base.contains(x):
            return False
        if any(not c.satisfied(x) for c in self.extra):
            return False
        return self.soc is None or self.soc.satisfied(x)


def _box_cells(box) -> int:
    cells = 1
    for lo, hi in box:
        if hi < lo:
            return 0
        cells *= hi - lo + 1
    return cells


def enumerate_integer_points(
    region: Region, budget: int = DEFAULT_CELL_BUDGET
) -> list[tuple[int, ...]]:
    """All integer points of the region in lexicographic order."""
    box = region.base.box
    cells = _box_cells(box)
    if cells > budget:
        raise BudgetExceededError(f"{cells} cells exceed budget {budget}")
    if cells == 0:
        return []
    ranges = [range(lo, hi + 1) for lo, hi in box]
    return [x for x in product(*ranges) if region.contains(x)]


def feasible_point(
    region: Region, budget: int = DEFAULT_CELL_BUDGET
) -> tuple[int, ...] | None:
    """Lexicographically first integer point of the region, or None."""
    box = region.base.box
    cells = _box_cells(box)
    if cells > budget:
        raise BudgetExceededError(f"{cells} cells exceed budget {budget}")
    if cells == 0:
        return None
    ranges = [range(lo, hi + 1) for lo, hi in box]
    for x in product(*ranges):
        if region.contains(x):
            return x
    return None


def bounding_radius(p: Polytope, forms) -> int:
    """Integer R >= 1 with |c . x + c0| <= R on all of P for every supplied
    form (c, c0), from the real coordinate box of P."""
    radius = Fraction(1)
    if p.is_empty:
        coord = [Fraction(0)] * p.n
    else:
        coord = [max(abs(lo), abs(hi)) for lo, hi in p.real_box]
    for coeffs, offset in forms:
        bound = sum(abs(c) * m for c, m in zip(coeffs, coord)) + abs(offset)
        radius = max(radius, bound)
    return int(math.ceil(radius))


def integer_hull_vertices(
    p: Polytope,
    extra: tuple[LinearConstraint, ...] = (),
    budget: int = DEFAULT_CELL_BUDGET,
) -> list[tuple[int, ...]]:
    """Exact vertex set of the convex hull of the region's integer points."""
    points = enumerate_integer_points(Region(p, tuple(extra)), budget)
    if not points:
        return []
    return hull_vertices(points)
