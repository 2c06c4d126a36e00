"""Demo objective: the nonnegative-but-not-sum-of-squares sextic

    M(x, y) = x^4 y^2 + x^2 y^4 - 3 x^2 y^2 + 1.

Away from the origin, (x^2 + y^2) * M expands into a sum of squared
products of the six forms x, y, 1-x, 1+x, 1-y, 1+y, so M itself is a sum
of three products of slice-decomposable quotients with nonnegative basic
parts, one of which carries the quartic (x^2 + y^2 - 2)^2.  Coordinate-axis
points are minimized by direct exact evaluation and merged at the end.
"""

from __future__ import annotations

from fractions import Fraction

from .driver import BasicSolver, CellTask, SolveReport, approx_minimize, normalize_epsilon
from .polytope import DEFAULT_CELL_BUDGET, Polytope, Region, enumerate_integer_points
from .sliceable import ZETA_CAP, add, even_power_form, even_power_product, multiply, reciprocal


def motzkin_value(x) -> int:
    a, b = x
    return a**4 * b**2 + a**2 * b**4 - 3 * a**2 * b**2 + 1


def _ring_distance_sq(x) -> int:
    return (x[0] ** 2 + x[1] ** 2 - 2) ** 2


def build_motzkin_specs():
    """The three slice-decomposable factors s_1, s_2, s_3 with
    s_1 + s_2 + s_3 * (x^2+y^2-2)^2 = M off the coordinate axes."""
    inv_norm = reciprocal(add(even_power_form((1, 0)), even_power_form((0, 1))))
    squares_1 = even_power_product(
        [((0, 1), 0, 2), ((-1, 0), 1, 2), ((1, 0), 1, 2)]
    )  # y^2 (1-x)^2 (1+x)^2
    squares_2 = even_power_product(
        [((1, 0), 0, 2), ((0, -1), 1, 2), ((0, 1), 1, 2)]
    )  # x^2 (1-y)^2 (1+y)^2
    squares_3 = even_power_product([((1, 0), 0, 2), ((0, 1), 0, 2)])  # x^2 y^2
    cap = max(ZETA_CAP, 64)
    return (
        multiply(inv_norm, squares_1, zeta_cap=cap),
        multiply(inv_norm, squares_2, zeta_cap=cap),
        multiply(inv_norm, squares_3, zeta_cap=cap),
    )


def _surrogate_solver() -> BasicSolver:
    """Exact desk-scale subsolver: the surrogate L1 + L2 + L3 * ring(x) is
    evaluated in rational arithmetic over every cell point."""

    def cell_min(task: CellTask):
        l1, l2, l3 = task.coeffs
        best = None
        for x in task.points:
            val = l1 + l2 + l3 * _ring_distance_sq(x)
            if best is None or val < best[1]:
                best = (x, val)
        return None if best is None else best[0]

    return BasicSolver("ring-surrogate", cell_min)


def minimize_motzkin(
    p: Polytope,
    epsilon,
    cover_strategy: str = "points",
    budget: int = DEFAULT_CELL_BUDGET,
) -> SolveReport:
    """Approximate min of the demo objective over the integer points of P,
    with the subdivision engine on off-axis points and direct evaluation on
    the axes."""
    eps = normalize_epsilon(epsilon)
    points = enumerate_integer_points(Region(p), budget)
    if not points:
        return SolveReport("infeasible", None, None, eps, "motzkin")
    axis = [x for x in points if x[0] == 0 or x[1] == 0]
    off_axis = [x for x in points if x[0] != 0 and x[1] != 0]

    best = None
    if axis:
        for x in axis:
            val = motzkin_value(x)
            if best is None or val < best[1] or (val == best[1] and x < best[0]):
                best = (x, val)
    cells = 0
    subproblems = 1 if axis else 0
    mode = "motzkin-direct"
    if off_axis:
        report = approx_minimize(
            p,
            _surrogate_solver(),
            build_motzkin_specs(),
            motzkin_value,
            eps,
            points=off_axis,
            cover_strategy=cover_strategy,
            budget=budget,
            mode_tag="motzkin",
        )
        cells = report.cell_count
        subproblems += report.subproblem_count
        mode = report.mode
        if report.solved and (
            best is None
            or report.value < best[1]
            or (report.value == best[1] and report.x < best[0])
        ):
            best = (report.x, report.value)
    return SolveReport("solved", best[0], best[1], eps, mode, cells, subproblems)


def motzkin_demo(
    box_bound: int,
    epsilon,
    cover_strategy: str = "points",
    budget: int = DEFAULT_CELL_BUDGET,
) -> SolveReport:
    """Demo entry point over the box [-K, K]^2."""
    if box_bound < 1:
        raise ValueError("box bound must be >= 1")
    p = Polytope.from_box([(-box_bound, box_bound)] * 2)
    return minimize_motzkin(p, epsilon, cover_strategy, budget)
