import random
from fractions import Fraction

import pytest

from sliceopt._hull import _brute_force_planes, _affine_rank_and_pivots, _vertex_indices_from_planes, hull_vertices
from sliceopt.polytope import (
    BudgetExceededError,
    LinearConstraint,
    Polytope,
    Region,
    SocConstraint,
    bounding_radius,
    enumerate_integer_points,
    feasible_point,
    integer_hull_vertices,
)

from _oracles import in_convex_hull


def test_box_construction_and_enumeration():
    box = Polytope.from_box([(0, 1), (0, 1)])
    assert enumerate_integer_points(Region(box)) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_unbounded_rejected():
    with pytest.raises(ValueError):
        Polytope([(1, 0)], [5])
    with pytest.raises(ValueError):
        Polytope([(1, 1), (-1, -1)], [3, 3])  # line through the strip


def test_empty_polytope():
    p = Polytope([(2,), (-2,)], [1, -1])  # only x = 1/2 feasible
    assert p.is_empty
    assert enumerate_integer_points(Region(p)) == []
    assert feasible_point(Region(p)) is None


def test_triangle_points_and_hull():
    tri = Polytope([(2, 2), (-1, 0), (0, -1)], [7, 0, 0])
    pts = enumerate_integer_points(Region(tri))
    assert len(pts) == 10
    assert all(tri.contains(x) for x in pts)
    assert integer_hull_vertices(tri) == [(0, 0), (0, 3), (3, 0)]


def test_extra_constraint_and_equality():
    box = Polytope.from_box([(0, 2)])
    empty = enumerate_integer_points(
        Region(box, (LinearConstraint((1,), -5, "=="),))
    )
    assert empty == []
    hit = enumerate_integer_points(Region(box, (LinearConstraint((1,), -2, "=="),)))
    assert hit == [(2,)]


def test_bounding_radius_examples():
    box = Polytope.from_box([(-3, 3), (-3, 3)])
    assert bounding_radius(box, [((1, 0), 0)]) == 3
    assert bounding_radius(box, [((1, 1), 1)]) == 7
    point = Polytope([(1,), (-1,)], [0, 0])
    assert bounding_radius(point, [((4,), -6)]) >= 6
    assert bounding_radius(box, []) == 1
    # no enumerated point violates the bound
    forms = [((2, -3), 1), ((1, 1), 0)]
    radius = bounding_radius(box, forms)
    for x in enumerate_integer_points(Region(box)):
        for coeffs, offset in forms:
            assert abs(sum(c * v for c, v in zip(coeffs, x)) + offset) <= radius


def test_budget_guard():
    big = Polytope.from_box([(0, 10**4), (0, 10**4)])
    with pytest.raises(BudgetExceededError):
        enumerate_integer_points(Region(big), budget=10**3)
    with pytest.raises(BudgetExceededError):
        feasible_point(Region(big), budget=10**3)


def test_soc_constraint_examples():
    soc = SocConstraint((1, -1), ((1, 0), (0, 1)), Fraction(0))
    box = Polytope.from_box([(-2, 2), (-2, 2)])
    assert soc.satisfied((0, 1))
    assert feasible_point(Region(box, (), soc)) is not None
    shifted = SocConstraint((1, -1), ((1, 0), (0, 1)), Fraction(-5, 2))
    unit = Polytope.from_box([(0, 1), (0, 1)])
    assert feasible_point(Region(unit, (), shifted)) is None
    # exact rational boundary: beta = 1/2, point must satisfy affine >= 0
    half = SocConstraint((1, -1), ((1, 0), (0, 1)), Fraction(1, 2))
    assert half.satisfied((0, 0))
    assert not half.satisfied((2, 0))


def test_hull_vertices_degenerate_shapes():
    assert hull_vertices([(1, 1)]) == [(1, 1)]
    assert hull_vertices([(0, 0), (2, 0), (1, 0)]) == [(0, 0), (2, 0)]
    assert hull_vertices([(0, 0, 0), (1, 1, 1), (2, 2, 2), (3, 3, 3)]) == [
        (0, 0, 0),
        (3, 3, 3),
    ]
    # coplanar square in 3-d keeps only its corners
    square = [(x, y, x + y) for x in range(3) for y in range(3)]
    assert hull_vertices(square) == [(0, 0, 0), (0, 2, 2), (2, 0, 2), (2, 2, 4)]


def test_hull_vertices_vs_bruteforce_random():
    rng = random.Random(5)
    for _ in range(150):
        dim = rng.choice([2, 3, 3, 4])
        count = rng.randint(dim + 1, 14)
        pts = [tuple(rng.randint(-3, 3) for _ in range(dim)) for _ in range(count)]
        got = hull_vertices(pts)
        ded = sorted(set(pts))
        rank, _ = _affine_rank_and_pivots(ded) if len(ded) > 1 else (0, [])
        if len(ded) > 2 and rank == dim:
            planes = _brute_force_planes(ded, dim)
            ref = sorted(ded[i] for i in _vertex_indices_from_planes(ded, planes, dim))
            assert got == ref
        # every non-vertex point is a convex combination of the vertices
        if len(ded) <= 12:
            for p in ded:
                assert in_convex_hull(p, got)
        assert set(got) <= set(ded)


def test_integer_hull_segment_example():
    seg = Polytope([(1, 0), (-1, 0), (0, 1), (0, -1)], [2, 0, 0, 0])
    assert integer_hull_vertices(seg) == [(0, 0), (2, 0)]
