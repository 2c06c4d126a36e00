import warnings
from fractions import Fraction

import pytest

from sliceopt.driver import (
    BasicSolver,
    CellTask,
    SolveReport,
    approx_minimize,
    approx_minimize_product,
    normalize_epsilon,
)
from sliceopt.polytope import Polytope
from sliceopt.sliceable import SliceableSpec, constant, even_power_form


def linear_solver():
    """Exact minimizer of sum_j g_j(x) * L_j for g_1(x) = x_1."""

    def cell_min(task: CellTask):
        (l1,) = task.coeffs
        best = None
        for x in task.points:
            val = l1 * x[0]
            if best is None or val < best[1] or (val == best[1] and x < best[0]):
                best = (x, val)
        return None if best is None else best[0]

    return BasicSolver("linear", cell_min)


def test_normalize_epsilon():
    assert normalize_epsilon(Fraction(1, 4)) == Fraction(1, 4)
    with pytest.raises(ValueError):
        normalize_epsilon(0)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        clamped = normalize_epsilon(Fraction(3, 2))
    assert clamped == Fraction(1023, 1024)
    assert any("clamped" in str(w.message) for w in caught)


def test_constant_sliceable_collapses_to_exact():
    box = Polytope.from_box([(-3, 3), (-3, 3)])
    report = approx_minimize(
        box, linear_solver(), [constant(1)], lambda x: x[0], Fraction(1, 2)
    )
    assert report.solved and report.value == -3
    assert report.x == (-3, -3)
    assert report.cell_count == 1  # no forms, a single covering cell


def test_single_point_and_infeasible():
    single = Polytope.from_box([(2, 2), (5, 5)])
    report = approx_minimize(
        single, linear_solver(), [constant(1)], lambda x: x[0], Fraction(1, 4)
    )
    assert report.solved and report.x == (2, 5) and report.value == 2
    empty = Polytope([(2,), (-2,)], [1, -1])
    report2 = approx_minimize(
        empty, linear_solver(), [constant(1)], lambda x: x[0], Fraction(1, 4)
    )
    assert report2.status == "infeasible" and report2.x is None


def test_determinism():
    box = Polytope.from_box([(-4, 4), (-4, 4)])
    spec = even_power_form((1, 1))
    runs = [
        approx_minimize(box, linear_solver(), [spec], lambda x: x[0], Fraction(1, 3))
        for _ in range(2)
    ]
    assert runs[0] == runs[1]


def test_cell_count_bounded_by_points():
    box = Polytope.from_box([(-5, 5), (-5, 5)])
    spec = even_power_form((1, 0))
    report = approx_minimize(
        box, linear_solver(), [spec], lambda x: x[0], Fraction(1, 4)
    )
    assert report.cell_count <= 121
    assert report.subproblem_count == report.cell_count


def test_product_mode_never_evaluates_factor():
    calls = []

    def booby_trap(x):
        calls.append(x)
        raise AssertionError("factor evaluator must not run in product mode")

    spec = SliceableSpec((0, 0), ((1, 0), (0, 1)), 1, booby_trap)

    def cell_min(task: CellTask):
        assert task.coeffs is None
        return min(task.points)

    box = Polytope.from_box([(-2, 2), (-2, 2)])
    report = approx_minimize_product(
        box, BasicSolver("first", cell_min), spec, lambda x: x[0] + x[1], Fraction(1, 4)
    )
    assert report.solved and not calls
    assert report.value == -4


def test_requires_a_spec():
    box = Polytope.from_box([(0, 1)])
    with pytest.raises(ValueError):
        approx_minimize(box, linear_solver(), [], lambda x: 0, Fraction(1, 2))
