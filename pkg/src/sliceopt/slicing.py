"""Multiplicative slice geometry for families of integer linear forms.

Integer points are indexed per form by the geometric band containing the
form value: band k >= 1 holds values in [ratio^(k-1), ratio^k], band 0 is
the exact zero level, and negative bands mirror the positive ones.  Band
membership at a boundary value is assigned to the lower band, which makes
every downstream tie-break deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _lp
from .polytope import (
    DEFAULT_CELL_BUDGET,
    LinearConstraint,
    Polytope,
    Region,
    enumerate_integer_points,
    feasible_point,
)

# ratio -> growing list of (numerator^k, denominator^k)
_POWER_CACHE: dict[tuple[int, int], list[tuple[int, int]]] = {}


@dataclass(frozen=True)
class SliceParams:
    """Linear forms L_j(x) = rows[j] . x + offsets[j] and the band ratio."""

    offsets: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    ratio: Fraction

    def __post_init__(self) -> None:
        if len(self.offsets) != len(self.rows):
            raise ValueError("offset/row count mismatch")
        if self.ratio <= 1:
            raise ValueError("ratio must exceed 1")

    @property
    def l(self) -> int:
        return len(self.rows)

    def form_value(self, j: int, x) -> int:
        return sum(c * v for c, v in zip(self.rows[j], x)) + self.offsets[j]


@dataclass(frozen=True)
class SliceKey:
    k: tuple[int, ...]


def _powers(ratio: Fraction, upto: int) -> list[tuple[int, int]]:
    key = (ratio.numerator, ratio.denominator)
    table = _POWER_CACHE.setdefault(key, [(1, 1)])
    num, den = key
    while len(table) <= upto:
        pn, pd = table[-1]
        table.append((pn * num, pd * den))
    return table


def _ceil_level(value: Fraction, ratio: Fraction) -> int:
    """Smallest k >= 0 with ratio^k >= value, for value >= 1. Exact, with a
    floating-point starting guess only."""
    if value <= 1:
        return 0
    guess = math.log(float(value)) / math.log(float(ratio))
    k = max(0, int(guess) - 2)
    table = _powers(ratio, k + 4)
    vn, vd = value.numerator, value.denominator
    while True:
        table = _powers(ratio, k)
        pn, pd = table[k]
        # ratio^k >= value  <=>  pn * vd >= vn * pd
        if pn * vd >= vn * pd:
            if k == 0:
                return 0
            qn, qd = _powers(ratio, k - 1)[k - 1]
            if qn * vd >= vn * qd:
                k -= 1
                continue
            return k
        k += 1


def level_index(value: int, ratio: Fraction) -> int:
    """Canonical band index of an integer form value (0 iff the value is 0;
    the smallest-magnitude valid index otherwise)."""
    if value == 0:
        return 0
    k = max(1, _ceil_level(Fraction(abs(value)), ratio))
    return k if value > 0 else -k


def canonical_key(x, params: SliceParams) -> SliceKey:
    return SliceKey(
        tuple(level_index(params.form_value(j, x), params.ratio) for j in range(params.l))
    )


def level_cap(radius: int, ratio: Fraction) -> int:
    """Smallest N with ratio^N >= radius (so every band index of a form
    bounded by radius has magnitude at most N)."""
    if radius < 1:
        raise ValueError("radius must be >= 1")
    return _ceil_level(Fraction(radius), ratio)


def _band_bounds(k: int, ratio: Fraction) -> tuple[Fraction, Fraction]:
    """Closed interval of form values for band k != 0."""
    m = abs(k)
    hi_n, hi_d = _powers(ratio, m)[m]
    lo_n, lo_d = _powers(ratio, m - 1)[m - 1]
    if k > 0:
        return Fraction(lo_n, lo_d), Fraction(hi_n, hi_d)
    return -Fraction(hi_n, hi_d), -Fraction(lo_n, lo_d)


def slice_constraints(
    key: SliceKey, params: SliceParams, cap: int | None = None
) -> list[LinearConstraint]:
    """The exact linear system of the slice, with rational band bounds
    cleared to integer coefficients."""
    out = []
    for j, k in enumerate(key.k):
        if cap is not None and abs(k) > cap:
            raise ValueError(f"band index {k} exceeds cap {cap}")
        coeffs, offset = params.rows[j], params.offsets[j]
        if k == 0:
            out.append(LinearConstraint(coeffs, offset, "=="))
            continue
        lo, hi = _band_bounds(k, params.ratio)
        out.append(LinearConstraint.from_bound(coeffs, offset, lo, ">="))
        out.append(LinearConstraint.from_bound(coeffs, offset, hi, "<="))
    return out


def cover_groups(
    p: Polytope,
    params: SliceParams,
    cap: int,
    strategy: str = "points",
    points=None,
    budget: int = DEFAULT_CELL_BUDGET,
) -> list[tuple[SliceKey, tuple[int, ...], tuple[tuple[int, ...], ...]]]:
    """Covering slice family with, per slice, a representative integer point
    and the slice's integer points, sorted by key.

    'points' groups the enumerated integer points by canonical key; 'cells'
    walks the band arrangement intersected with P and keeps nonempty cells.
    Both satisfy the covering contract.
    """
    if points is None:
        points = enumerate_integer_points(Region(p), budget)
    if not points:
        return []
    if strategy == "points":
        groups: dict[tuple[int, ...], list] = {}
        for x in points:
            groups.setdefault(canonical_key(x, params).k, []).append(x)
        return [
            (SliceKey(k), tuple(groups[k][0]), tuple(groups[k]))
            for k in sorted(groups)
        ]
    if strategy == "cells":
        out = []
        for key, rep in _arrangement_cover(p, params, cap, budget):
            members = tuple(
                x
                for x in points
                if all(c.satisfied(x) for c in slice_constraints(key, params))
            )
            if members:
                out.append((key, rep, members))
        return out
    raise ValueError(f"unknown cover strategy {strategy!r}")


def cover(
    p: Polytope,
    params: SliceParams,
    cap: int,
    strategy: str = "points",
    points=None,
    budget: int = DEFAULT_CELL_BUDGET,
) -> list[tuple[SliceKey, tuple[int, ...]]]:
    """Covering family of (slice key, representative integer point)."""
    return [(key, rep) for key, rep, _ in cover_groups(p, params, cap, strategy, points, budget)]


def _constraint_rows(constraints) -> tuple[list, list]:
    rows, rhs = [], []
    for c in constraints:
        if c.rel in ("<=", "=="):
            rows.append(c.coeffs)
            rhs.append(Fraction(-c.offset))
        if c.rel in (">=", "=="):
            rows.append(tuple(-v for v in c.coeffs))
            rhs.append(Fraction(c.offset))
    return rows, rhs


def _arrangement_cover(p: Polytope, params: SliceParams, cap: int, budget: int):
    """Depth-first walk of the band arrangement restricted to P.

    Per form the exact range of the form over the current rational
    relaxation prunes the candidate bands; zero bands (degenerate,
    lower-dimensional cells) are included explicitly.  A leaf cell is kept
    iff it contains an integer point.
    """
    base_rows = [tuple(r) for r in p.a_rows]
    base_rhs = [Fraction(v) for v in p.b]
    found = []

    def descend(j: int, constraints: list, prefix: tuple[int, ...]) -> None:
        if j == params.l:
            region = Region(p, tuple(constraints))
            rep = feasible_point(region, budget)
            if rep is not None:
                found.append((SliceKey(prefix), rep))
            return
        extra_rows, extra_rhs = _constraint_rows(constraints)
        rng = _lp.linear_range(
            base_rows + extra_rows,
            base_rhs + extra_rhs,
            p.n,
            params.rows[j],
            params.offsets[j],
        )
        if rng is None:
            return
        lo, hi = rng
        candidates = []
        if hi <= -1:
            mag_lo = -hi
        else:
            mag_lo = Fraction(1)
        if lo <= -1:
            m_start = max(1, _ceil_level(mag_lo, params.ratio))
            m_end = max(1, _ceil_level(-lo, params.ratio))
            candidates.extend(-m for m in range(m_end, m_start - 1, -1) if m <= cap)
        if lo <= 0 <= hi:
            candidates.append(0)
        if hi >= 1:
            k_start = max(1, _ceil_level(max(lo, Fraction(1)), params.ratio))
            k_end = max(1, _ceil_level(hi, params.ratio))
            candidates.extend(k for k in range(k_start, k_end + 1) if k <= cap)
        for k in candidates:
            sub = slice_constraints(SliceKey((k,)), _single_form(params, j))
            descend(j + 1, constraints + sub, prefix + (k,))

    descend(0, [], ())
    return sorted(found, key=lambda pair: pair[0].k)


def _single_form(params: SliceParams, j: int) -> SliceParams:
    return SliceParams((params.offsets[j],), (params.rows[j],), params.ratio)
