"""Integer minimization of x^T Q x when Q has at most one negative or at
most one positive eigenvalue.

After the scaled decomposition S D S^T = c^3 Q (with the lone negative
diagonal entry last), the scaled objective splits into the product of

    g~(x) = sqrt(p(x)) - t(x)      and      s~(x) = sqrt(p(x)) + t(x),

where p(x) = |d_n| * sum_{i<n} d_i (form_i . x)^2 and
t(x) = |d_n| * |form_n . x|, so that g~ * s~ = |d_n| c^3 x^T Q x exactly.
The nonnegative factor s~ is slice-decomposable with unit variation
budget; per cell, g~ is minimized exactly by bisection over cone
feasibility, with all comparisons done on exact surds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._hull import hull_vertices
from .driver import BasicSolver, SolveReport, approx_minimize_product
from .exactnum import Surd, delta_lower_bound, surd_compare
from .linalg import Decomposition, SymMatrix, decompose, reorder_for_one_negative
from .polytope import (
    DEFAULT_CELL_BUDGET,
    Polytope,
    Region,
    SocConstraint,
    bounding_radius,
    enumerate_integer_points,
)
from .sliceable import SliceableSpec


class UnsupportedInertiaError(Exception):
    """Both two-or-more positive and two-or-more negative eigenvalues."""


@dataclass(frozen=True)
class QuadFormInstance:
    """A quadratic objective with its scaled decomposition and polytope.

    `target` is the matrix the decomposition factors (Q itself, or -Q in
    one-positive mode, where the product split applies to -f).  `radius`
    bounds every |form_i . x| on P and every |d_i|.
    """

    q: SymMatrix
    target: SymMatrix
    dec: Decomposition
    inertia: tuple[int, int, int]
    mode: str
    p: Polytope
    radius: int

    @property
    def n(self) -> int:
        return self.q.n


def eval_f(q: SymMatrix, x) -> int:
    """Exact integer value of x^T Q x."""
    return sum(
        q.rows[i][j] * x[i] * x[j] for i in range(q.n) for j in range(q.n)
    )


def build_instance(q: SymMatrix, p: Polytope) -> QuadFormInstance:
    """Decompose, classify by inertia, and compute the form bound R."""
    if q.n != p.n:
        raise ValueError("matrix and polytope dimensions differ")
    dec = decompose(q)
    n_plus, n_minus, _ = dec.inertia()
    if n_minus == 0:
        mode, target, dec_used = "convex", q, dec
    elif n_plus == 0:
        mode, target, dec_used = "concave", q, dec
    elif n_minus == 1:
        mode, target, dec_used = "one-negative", q, reorder_for_one_negative(dec)
    elif n_plus == 1:
        neg = q.neg()
        mode, target = "one-positive", neg
        dec_used = reorder_for_one_negative(decompose(neg))
    else:
        raise UnsupportedInertiaError(
            f"inertia ({n_plus}, {n_minus}) has no one-sided eigenvalue"
        )
    forms = [(dec_used.form(i), 0) for i in range(dec_used.n)]
    radius = max(
        bounding_radius(p, forms), max(abs(d) for d in dec_used.d), 1
    )
    return QuadFormInstance(
        q, target, dec_used, (n_plus, n_minus, q.n - n_plus - n_minus), mode, p, radius
    )


def surd_parts(inst: QuadFormInstance, x) -> tuple[int, int]:
    """(p, t) with p = |d_n| sum_{i<n} d_i (form_i.x)^2 and
    t = |d_n| |form_n.x| >= 0."""
    dec = inst.dec
    n = dec.n
    dn = -dec.d[-1]
    if dn <= 0:
        raise ValueError("instance is not in a product mode")
    p_val = dn * sum(dec.d[i] * dec.form_value(i, x) ** 2 for i in range(n - 1))
    t_val = dn * abs(dec.form_value(n - 1, x))
    return p_val, t_val


def eval_g_scaled(inst: QuadFormInstance, x) -> Surd:
    """sqrt(-d_n) * g(x) as the exact surd sqrt(p) - t."""
    p_val, t_val = surd_parts(inst, x)
    return Surd(p_val, -t_val)


def eval_s_scaled(inst: QuadFormInstance, x) -> Surd:
    """sqrt(-d_n) * s(x) as the exact surd sqrt(p) + t; always >= 0."""
    p_val, t_val = surd_parts(inst, x)
    return Surd(p_val, t_val)


def sliceable_spec_for_s(inst: QuadFormInstance) -> SliceableSpec:
    """The nonnegative factor as a sliceable spec: the decomposition forms
    with zero offsets and unit variation budget (the factor is positively
    homogeneous of degree one in the form values)."""
    dec = inst.dec
    return SliceableSpec(
        (0,) * dec.n,
        dec.forms,
        1,
        lambda x: eval_s_scaled(inst, x),
        label="cone-split-factor",
    )


def mu_precision(inst: QuadFormInstance) -> Fraction:
    """Bisection precision below which two scaled g values must coincide:
    the separation bound at parameter size n * R^4."""
    return delta_lower_bound(inst.n * inst.radius**4)


def _isqrt_ceil(v: int) -> int:
    r = math.isqrt(v)
    return r if r * r == v else r + 1


def _half_points(inst: QuadFormInstance, points, sign: int):
    """Per point on the closed halfspace sign*(form_n.x) >= 0:
    (x, p, t) with t = |d_n| * sign * (form_n.x) >= 0."""
    dec = inst.dec
    dn = -dec.d[-1]
    out = []
    for x in points:
        ln = dec.form_value(dec.n - 1, x)
        if sign * ln < 0:
            continue
        p_val = dn * sum(dec.d[i] * dec.form_value(i, x) ** 2 for i in range(dec.n - 1))
        out.append((x, p_val, dn * sign * ln))
    return out


def _signed_soc(inst: QuadFormInstance, sign: int, beta: Fraction) -> SocConstraint:
    dec = inst.dec
    forms = dec.forms[:-1] + (tuple(sign * c for c in dec.form(dec.n - 1)),)
    return SocConstraint(dec.d, forms, beta)


def _bisect_half(inst: QuadFormInstance, half, sign: int, mu: Fraction):
    """Exact argmin of sqrt(p) - t over one halfspace's points.

    Bisects beta over cone feasibility; stops as soon as the feasible set
    at the upper end is value-constant (exact surd equality), which the
    separation bound guarantees happens no later than window width mu.
    """
    if not half:
        return None
    lo = min(math.isqrt(p) - t for _, p, t in half) - 1
    hi = min(_isqrt_ceil(p) - t for _, p, t in half)
    lo_f, hi_f = Fraction(lo), Fraction(hi)

    def feasible_set(beta: Fraction):
        soc = _signed_soc(inst, sign, beta)
        return [entry for entry in half if soc.satisfied(entry[0])]

    current = feasible_set(hi_f)
    while True:
        x0, p0, t0 = current[0]
        v0 = Surd(p0, -t0)
        if all(surd_compare(v0, Surd(p, -t)) == 0 for _, p, t in current[1:]):
            best = min(entry[0] for entry in current)
            return best, v0
        if hi_f - lo_f <= mu:
            # unreachable: distinct surd values in the window would violate
            # the separation bound
            raise AssertionError("bisection window collapsed on unequal values")
        mid = (lo_f + hi_f) / 2
        candidate = feasible_set(mid)
        if candidate:
            hi_f, current = mid, candidate
        else:
            lo_f = mid


def min_g(
    inst: QuadFormInstance,
    region: Region | None = None,
    points=None,
    budget: int = DEFAULT_CELL_BUDGET,
):
    """Exact minimizer of the scaled convex-side factor sqrt(p) - t over the
    region's integer points, or None if there are none.

    Splits on the sign of the last form and bisects beta on each closed
    halfspace, testing cone feasibility exactly; Lemma-style separation of
    surd values makes the final window an exact argmin certificate.
    """
    if points is None:
        if region is None:
            raise ValueError("either region or points must be given")
        points = enumerate_integer_points(region, budget)
    if not points:
        return None
    mu = mu_precision(inst)
    best = None
    for sign in (1, -1):
        res = _bisect_half(inst, _half_points(inst, points, sign), sign, mu)
        if res is None:
            continue
        if best is None:
            best = res
            continue
        cmp = surd_compare(res[1], best[1])
        if cmp < 0 or (cmp == 0 and res[0] < best[0]):
            best = res
    return best


def min_g_enumerated(inst: QuadFormInstance, points):
    """Independent oracle for min_g: scan all points with exact surd
    comparison."""
    best = None
    for x in points:
        p_val, t_val = surd_parts(inst, x)
        val = Surd(p_val, -t_val)
        if best is None or surd_compare(val, best[1]) < 0:
            best = (x, val)
    return best


def _sqrt_fraction_floor(value: Fraction, precision: Fraction) -> Fraction:
    """Rational approximation of sqrt(value) within `precision` from below."""
    scale = precision.denominator // precision.numerator + 1
    den = value.denominator
    root = math.isqrt(value.numerator * den * scale * scale)
    return Fraction(root, den * scale)


def approx_g_value(inst: QuadFormInstance, x, precision: Fraction) -> Fraction:
    """Rational approximation of the unscaled factor g(x) within
    `precision`; comparison-oracle utility for cross-checks only (the
    solvers never compare through this)."""
    p_val, t_val = surd_parts(inst, x)
    dn = -inst.dec.d[-1]
    half = precision / 2
    return _sqrt_fraction_floor(Fraction(p_val, dn), half) - _sqrt_fraction_floor(
        Fraction(t_val * t_val, dn), half
    )


def min_neg_g(
    inst: QuadFormInstance,
    region: Region | None = None,
    points=None,
    budget: int = DEFAULT_CELL_BUDGET,
):
    """The f-minimizing vertex of the integer hull of the region's points.

    The concave-side factor attains its minimum at such a vertex, so the
    returned point is at least as good in f; square roots never enter."""
    if points is None:
        if region is None:
            raise ValueError("either region or points must be given")
        points = enumerate_integer_points(region, budget)
    if not points:
        return None
    best = None
    for v in hull_vertices(points):
        val = eval_f(inst.q, v)
        if best is None or val < best[1]:
            best = (v, val)
    return best


def fptas_quadform(
    q: SymMatrix,
    p: Polytope,
    epsilon,
    cover_strategy: str = "points",
    budget: int = DEFAULT_CELL_BUDGET,
) -> SolveReport:
    """Approximation scheme for min x^T Q x over the integer points of P,
    for Q with at most one negative or at most one positive eigenvalue.

    Semidefinite inertias are solved exactly (convex level search or
    concave hull-vertex scan); the indefinite one-sided cases run the
    product-form subdivision engine on the scaled split, with the
    one-positive case handled on -Q through hull-vertex cell solves."""
    from . import exact as exact_mod

    points = enumerate_integer_points(Region(p), budget)
    inst = build_instance(q, p)
    if not points:
        return SolveReport(
            "infeasible", None, None, Fraction(0), f"fptas-{inst.mode}"
        )
    if inst.mode == "convex":
        return exact_mod.convex_min(q, p, points=points)
    if inst.mode == "concave":
        return exact_mod.concave_min(q, p, points=points)

    spec_s = sliceable_spec_for_s(inst)
    if inst.mode == "one-negative":
        def cell_min(task):
            res = min_g(inst, points=list(task.points))
            return None if res is None else res[0]

        solver = BasicSolver("cone-bisection", cell_min)
    else:
        def cell_min(task):
            res = min_neg_g(inst, points=list(task.points))
            return None if res is None else res[0]

        solver = BasicSolver("hull-vertices", cell_min)

    return approx_minimize_product(
        p,
        solver,
        spec_s,
        lambda x: eval_f(q, x),
        epsilon,
        points=points,
        cover_strategy=cover_strategy,
        budget=budget,
        mode_tag=f"fptas-{inst.mode}",
    )
