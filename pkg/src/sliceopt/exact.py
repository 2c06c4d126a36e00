"""Exact solvers for the one-sided quadratic cases and the 3-d dispatcher.

For one negative eigenvalue, the sublevel set {f <= 0} splits along the
sign of the last decomposition form into two cone pieces on which f is
quasi-convex; an integer level search over each piece either certifies
f_opt > 0 or returns the exact optimum.  For one positive eigenvalue,
hull-vertex signs certify f >= 0 on all integer points, after which the
optimum sits on a hull vertex.  In dimension three every inertia falls
into an exactly solvable or a product-form case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._hull import hull_vertices
from .driver import SolveReport, normalize_epsilon
from .linalg import SymMatrix
from .polytope import DEFAULT_CELL_BUDGET, LinearConstraint, Polytope, Region, enumerate_integer_points
from .quadform import (
    QuadFormInstance,
    UnsupportedInertiaError,
    build_instance,
    eval_f,
    fptas_quadform,
)


@dataclass(frozen=True)
class RegionSplit:
    """The two sign-split pieces of the qualifying level set: piece +1 is
    {f <= 0, form_n . x >= 0} and piece -1 mirrors it (with f >= 0 instead
    in one-positive mode, where the decomposition is of -Q)."""

    inst: QuadFormInstance

    def side_constraint(self, sign: int) -> LinearConstraint:
        form = self.inst.dec.form(self.inst.dec.n - 1)
        return LinearConstraint(tuple(sign * c for c in form), 0, ">=")

    def contains(self, x, sign: int) -> bool:
        if not self.side_constraint(sign).satisfied(x):
            return False
        value = eval_f(self.inst.q, x)
        return value >= 0 if self.inst.mode == "one-positive" else value <= 0


def _objective_box_bound(q: SymMatrix, p: Polytope) -> int:
    """Integer F with |x^T Q x| <= F on P, from the coordinate box."""
    if p.is_empty:
        return 1
    coord = [max(abs(lo), abs(hi)) for lo, hi in p.real_box]
    bound = sum(
        abs(q.rows[i][j]) * coord[i] * coord[j]
        for i in range(q.n)
        for j in range(q.n)
    )
    return int(math.ceil(bound)) + 1


def _level_search(points, values, hi_start: int, lo_start: int):
    """Smallest integer level with a point at or below it, with the
    lexicographically first achiever; points must be in lex order and
    `lo_start` strictly infeasible, `hi_start` feasible."""
    lo, hi = lo_start, hi_start
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if any(v <= mid for v in values):
            hi = mid
        else:
            lo = mid
    achiever = next(x for x, v in zip(points, values) if v == hi)
    return achiever, hi


def quasiconvex_min_region(
    inst: QuadFormInstance,
    halfspace_sign: int,
    points=None,
    budget: int = DEFAULT_CELL_BUDGET,
):
    """Exact min of f over one sign-split piece of {f <= 0} intersected
    with the integer points, by binary search on integer objective levels
    with enumeration-backed feasibility; None when the piece is empty."""
    if inst.mode != "one-negative":
        raise ValueError("region split applies to the one-negative mode")
    if points is None:
        points = enumerate_integer_points(Region(inst.p), budget)
    split = RegionSplit(inst)
    side = split.side_constraint(halfspace_sign)
    member_pts = [x for x in points if side.satisfied(x)]
    values = [eval_f(inst.q, x) for x in member_pts]
    candidates = [(x, v) for x, v in zip(member_pts, values) if v <= 0]
    if not candidates:
        return None
    cand_pts = [x for x, _ in candidates]
    cand_vals = [v for _, v in candidates]
    bound = _objective_box_bound(inst.q, inst.p)
    return _level_search(cand_pts, cand_vals, 0, -bound - 1)


def exact_solve(
    q: SymMatrix,
    p: Polytope,
    points=None,
    budget: int = DEFAULT_CELL_BUDGET,
) -> SolveReport | None:
    """Exact optimum when the qualifying sign condition holds, else None.

    One negative eigenvalue: both cone pieces of {f <= 0} are searched; a
    hit is the exact optimum, no hit certifies f_opt > 0.  One positive
    eigenvalue: a negative hull vertex disproves f >= 0 (returns None);
    otherwise nonnegativity is certified and the optimum is the best hull
    vertex of the two sign-split integer hulls."""
    if points is None:
        points = enumerate_integer_points(Region(p), budget)
    inst = build_instance(q, p)
    if inst.mode not in ("one-negative", "one-positive"):
        raise UnsupportedInertiaError(
            f"exact_solve requires a one-sided indefinite inertia, got {inst.mode}"
        )
    if not points:
        return SolveReport("infeasible", None, None, Fraction(0), f"exact-{inst.mode}")
    if inst.mode == "one-negative":
        best = None
        for sign in (1, -1):
            res = quasiconvex_min_region(inst, sign, points, budget)
            if res is None:
                continue
            if best is None or res[1] < best[1] or (res[1] == best[1] and res[0] < best[0]):
                best = res
        if best is None:
            return None
        return SolveReport(
            "solved", best[0], best[1], Fraction(0), "exact-one-negative", 2, 2
        )

    split = RegionSplit(inst)
    vertex_pool = []
    for sign in (1, -1):
        side = split.side_constraint(sign)
        side_points = [x for x in points if side.satisfied(x)]
        if side_points:
            vertex_pool.extend(hull_vertices(side_points))
    best = None
    for v in sorted(set(vertex_pool)):
        val = eval_f(q, v)
        if val < 0:
            return None
        if best is None or val < best[1]:
            best = (v, val)
    return SolveReport(
        "solved", best[0], best[1], Fraction(0), "exact-one-positive", 2, 2
    )


def convex_min(
    q: SymMatrix,
    p: Polytope,
    points=None,
    budget: int = DEFAULT_CELL_BUDGET,
) -> SolveReport:
    """Exact min of a convex integer quadratic by binary search on integer
    objective levels with enumeration-backed feasibility."""
    if points is None:
        points = enumerate_integer_points(Region(p), budget)
    if not points:
        return SolveReport("infeasible", None, None, Fraction(0), "convex-exact")
    values = [eval_f(q, x) for x in points]
    bound = _objective_box_bound(q, p)
    x, val = _level_search(points, values, bound, -bound - 1)
    return SolveReport("solved", x, val, Fraction(0), "convex-exact", 0, 1)


def concave_min(
    q: SymMatrix,
    p: Polytope,
    points=None,
    budget: int = DEFAULT_CELL_BUDGET,
) -> SolveReport:
    """Exact min of a concave integer quadratic at a vertex of the integer
    hull, by exact hull-vertex evaluation."""
    if points is None:
        points = enumerate_integer_points(Region(p), budget)
    if not points:
        return SolveReport("infeasible", None, None, Fraction(0), "concave-exact")
    best = None
    for v in hull_vertices(points):
        val = eval_f(q, v)
        if best is None or val < best[1]:
            best = (v, val)
    return SolveReport("solved", best[0], best[1], Fraction(0), "concave-exact", 0, 1)


def solve_dim3(
    q: SymMatrix,
    p: Polytope,
    epsilon,
    cover_strategy: str = "points",
    budget: int = DEFAULT_CELL_BUDGET,
) -> SolveReport:
    """Full three-dimensional dispatcher: every inertia of a symmetric
    3 x 3 integer matrix is routed to an exact or product-form solver;
    the exact qualifying-sign solver is attempted before falling back."""
    if q.n != 3:
        raise ValueError("solve_dim3 requires n = 3")
    eps = normalize_epsilon(epsilon)
    points = enumerate_integer_points(Region(p), budget)
    if not points:
        return SolveReport("infeasible", None, None, eps, "dim3")
    inst = build_instance(q, p)
    if inst.mode == "convex":
        return convex_min(q, p, points=points)
    if inst.mode == "concave":
        return concave_min(q, p, points=points)
    report = exact_solve(q, p, points=points, budget=budget)
    if report is not None:
        return report
    return fptas_quadform(q, p, eps, cover_strategy=cover_strategy, budget=budget)
