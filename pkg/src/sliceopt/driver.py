"""Generic approximation engine over slice covers.

The feasible integer points are covered by band cells of the combined
slicing forms; a per-cell subsolver produces a cell candidate, and the
final answer is the candidate with the smallest true objective value,
compared exactly.  With accuracy eps the cells are built at ratio
1 + (eps/4)/zeta_max, which makes the winning candidate an eps-approximate
minimizer in the sign-dependent sense used throughout this package.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .exactnum import ExactValue, Surd, value_compare
from .polytope import DEFAULT_CELL_BUDGET, Polytope, Region, bounding_radius, enumerate_integer_points
from .sliceable import SliceableSpec
from .slicing import SliceKey, SliceParams, cover_groups, level_cap

# Accuracy requests at or above 1 are clamped here; the subdivision
# constants assume eps < 1 and the guarantee is monotone in eps.
EPSILON_CLAMP = Fraction(1023, 1024)


@dataclass
class SolveReport:
    """Outcome of a solve: status, minimizer, exact value, provenance."""

    status: str
    x: Optional[tuple[int, ...]]
    value: Optional[ExactValue]
    epsilon: Fraction
    mode: str
    cell_count: int = 0
    subproblem_count: int = 0

    @property
    def solved(self) -> bool:
        return self.status == "solved"


@dataclass(frozen=True)
class CellTask:
    """One subproblem: the cell's integer points and, when the engine is
    run with explicit surrogate coefficients, one coefficient per term."""

    key: SliceKey
    points: tuple[tuple[int, ...], ...]
    coeffs: Optional[tuple[Fraction, ...]]


@dataclass(frozen=True)
class BasicSolver:
    """Per-cell minimization capability for a sign-compatible term class.

    `minimize_cell` returns a cell point whose surrogate objective is within
    the engine's per-cell accuracy of the cell optimum (exact subsolvers
    trivially qualify), or None for an empty cell.
    """

    name: str
    minimize_cell: Callable[[CellTask], Optional[tuple[int, ...]]]


def normalize_epsilon(epsilon) -> Fraction:
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    if eps >= 1:
        warnings.warn(
            f"epsilon = {eps} clamped to {EPSILON_CLAMP}; the guarantee is "
            "monotone so the requested accuracy still holds",
            stacklevel=3,
        )
        return EPSILON_CLAMP
    return eps


def _combined_params(specs, eps_prime: Fraction):
    zeta_max = max(spec.zeta for spec in specs)
    offsets = tuple(v for spec in specs for v in spec.offsets)
    rows = tuple(row for spec in specs for row in spec.rows)
    return offsets, rows, Fraction(1) + eps_prime / zeta_max


def _run(
    p: Polytope,
    solver: BasicSolver,
    specs,
    f_eval,
    epsilon,
    *,
    with_coeffs: bool,
    points=None,
    cover_strategy: str = "points",
    budget: int = DEFAULT_CELL_BUDGET,
    mode_tag: str = "fptas",
) -> SolveReport:
    eps = normalize_epsilon(epsilon)
    eps_prime = eps / 4
    if points is None:
        points = enumerate_integer_points(Region(p), budget)
    mode = f"{mode_tag}/{solver.name}/{cover_strategy}"
    if not points:
        return SolveReport("infeasible", None, None, eps, mode)
    offsets, rows, ratio = _combined_params(specs, eps_prime)
    if rows:
        radius = bounding_radius(p, list(zip(rows, offsets)))
        cap = level_cap(radius, ratio)
        params = SliceParams(offsets, rows, ratio)
        groups = cover_groups(p, params, cap, cover_strategy, points, budget)
    else:
        groups = [(SliceKey(()), points[0], tuple(points))]

    best_x = None
    best_val = None
    subproblems = 0
    scale_down = Fraction(1) / (1 + eps_prime)
    for key, rep, members in groups:
        coeffs = None
        if with_coeffs:
            coeffs = tuple(Fraction(spec.evaluator(rep)) * scale_down for spec in specs)
        subproblems += 1
        x = solver.minimize_cell(CellTask(key, members, coeffs))
        if x is None:
            continue
        val = f_eval(x)
        if (
            best_val is None
            or value_compare(val, best_val) < 0
            or (value_compare(val, best_val) == 0 and x < best_x)
        ):
            best_x, best_val = x, val
    if best_x is None:
        return SolveReport("infeasible", None, None, eps, mode, len(groups), subproblems)
    return SolveReport(
        "solved", tuple(best_x), best_val, eps, mode, len(groups), subproblems
    )


def approx_minimize(
    p: Polytope,
    solver: BasicSolver,
    specs,
    f_eval,
    epsilon,
    *,
    points=None,
    cover_strategy: str = "points",
    budget: int = DEFAULT_CELL_BUDGET,
    mode_tag: str = "fptas",
) -> SolveReport:
    """Approximate min of sum_j g_j(x) s_j(x) over the integer points of P.

    `solver` receives, per cell, the surrogate coefficients
    L_j = s_j(representative) / (1 + eps/4); evaluators of the specs must be
    rational-valued for the coefficients to be formed exactly.
    """
    specs = list(specs)
    if not specs:
        raise ValueError("at least one sliceable term is required")
    return _run(
        p,
        solver,
        specs,
        f_eval,
        epsilon,
        with_coeffs=True,
        points=points,
        cover_strategy=cover_strategy,
        budget=budget,
        mode_tag=mode_tag,
    )


def approx_minimize_product(
    p: Polytope,
    solver: BasicSolver,
    spec_s: SliceableSpec,
    f_eval,
    epsilon,
    *,
    points=None,
    cover_strategy: str = "points",
    budget: int = DEFAULT_CELL_BUDGET,
    mode_tag: str = "fptas",
) -> SolveReport:
    """Single-product variant g(x) * s(x): the nonnegative factor shapes the
    cells but is never evaluated inside subproblems (no surrogate
    coefficient is formed), only the final exact comparison uses f_eval."""
    return _run(
        p,
        solver,
        [spec_s],
        f_eval,
        epsilon,
        with_coeffs=False,
        points=points,
        cover_strategy=cover_strategy,
        budget=budget,
        mode_tag=mode_tag,
    )
