import random
from fractions import Fraction

import pytest

from sliceopt.polytope import Polytope, Region, bounding_radius, enumerate_integer_points
from sliceopt.slicing import (
    SliceKey,
    SliceParams,
    canonical_key,
    cover,
    cover_groups,
    level_cap,
    level_index,
    slice_constraints,
)

TWO = Fraction(2)


def test_level_index_examples():
    assert level_index(3, TWO) == 2
    assert level_index(0, TWO) == 0
    assert level_index(-1, Fraction(3, 2)) == -1
    assert level_index(2, TWO) == 1  # boundary value goes to the lower band
    assert level_index(-4, TWO) == -2
    assert level_index(1, Fraction(101, 100)) == 1


def test_level_index_monotone():
    rng = random.Random(8)
    for ratio in (TWO, Fraction(5, 4), Fraction(17, 16)):
        values = sorted(rng.randint(1, 10**5) for _ in range(300))
        levels = [level_index(v, ratio) for v in values]
        assert levels == sorted(levels)
        for v, k in zip(values, levels):
            assert level_index(-v, ratio) == -k


def test_level_index_band_membership():
    rng = random.Random(9)
    for _ in range(500):
        ratio = Fraction(rng.randint(101, 300), 100)
        v = rng.randint(1, 10**4)
        k = level_index(v, ratio)
        assert k >= 1
        assert v <= ratio**k
        assert k == 1 or v >= ratio ** (k - 1)


def test_canonical_key_examples():
    params = SliceParams((0, 0), ((1, 0), (0, 1)), TWO)
    assert canonical_key((3, 0), params).k == (2, 0)
    assert canonical_key((1, 1), params).k == (1, 1)
    assert canonical_key((-4, 2), params).k == (-2, 1)


def test_level_cap_examples():
    assert level_cap(1024, Fraction(5, 4)) == 32
    assert level_cap(1, TWO) == 0
    assert level_cap(8, TWO) == 3
    assert level_cap(9, TWO) == 4


def test_slice_constraints():
    params1 = SliceParams((0,), ((1,),), TWO)
    eq = slice_constraints(SliceKey((0,)), params1)
    assert len(eq) == 1 and eq[0].rel == "=="
    band2 = slice_constraints(SliceKey((2,)), params1)
    sat = lambda cons, v: all(c.satisfied((v,)) for c in cons)
    assert sat(band2, 2) and sat(band2, 3) and sat(band2, 4)
    assert not sat(band2, 1) and not sat(band2, 5)
    neg = slice_constraints(SliceKey((-2,)), params1)
    assert sat(neg, -2) and sat(neg, -4)
    assert not sat(neg, -1) and not sat(neg, -5)
    with pytest.raises(ValueError):
        slice_constraints(SliceKey((9,)), params1, cap=3)


def test_offset_forms():
    # L(x) = x - 5 on integers 4..6: keys -1, 0, 1
    params = SliceParams((-5,), ((1,),), TWO)
    assert canonical_key((4,), params).k == (-1,)
    assert canonical_key((5,), params).k == (0,)
    assert canonical_key((6,), params).k == (1,)


def test_cover_examples():
    p14 = Polytope.from_box([(1, 4)])
    params = SliceParams((0,), ((1,),), TWO)
    got = cover(p14, params, level_cap(4, TWO))
    assert [key.k for key, _ in got] == [(1,), (2,)]
    # single point at the origin
    origin = Polytope.from_box([(0, 0), (0, 0)])
    params2 = SliceParams((0, 0), ((1, 0), (0, 1)), TWO)
    got2 = cover(origin, params2, 1)
    assert got2 == [(SliceKey((0, 0)), (0, 0))]
    # no integer points
    empty = Polytope([(2,), (-2,)], [1, -1])
    assert cover(empty, params, 1) == []


@pytest.mark.parametrize("strategy", ["points", "cells"])
def test_cover_coverage_invariant(strategy):
    tri = Polytope([(2, 2), (-1, 0), (0, -1), (1, -1)], [9, 0, 0, 2])
    ratio = Fraction(5, 4)
    params = SliceParams((0, 1), ((1, 1), (1, -2)), ratio)
    radius = bounding_radius(tri, [((1, 1), 0), ((1, -2), 1)])
    cap = level_cap(radius, ratio)
    groups = cover_groups(tri, params, cap, strategy=strategy)
    pts = set(enumerate_integer_points(Region(tri)))
    covered = set()
    keys = set()
    for key, rep, members in groups:
        assert rep in pts
        assert key.k not in keys
        keys.add(key.k)
        cons = slice_constraints(key, params, cap)
        for m in members:
            assert all(c.satisfied(m) for c in cons)
        covered.update(members)
    assert covered == pts
    # a point's canonical key always appears among the cover keys
    for x in pts:
        assert canonical_key(x, params).k in keys


def test_cells_cover_size_bound():
    # arrangement cell count stays within the coarse (2N+3)^n * l^n envelope
    box = Polytope.from_box([(-5, 5), (-5, 5)])
    ratio = Fraction(3, 2)
    params = SliceParams((0, 0), ((1, 0), (0, 1)), ratio)
    cap = level_cap(bounding_radius(box, [((1, 0), 0), ((0, 1), 0)]), ratio)
    groups = cover_groups(box, params, cap, strategy="cells")
    assert len(groups) <= (2 * cap + 3) ** 2 * (2**2)
    pts_groups = cover_groups(box, params, cap, strategy="points")
    assert len(pts_groups) <= len(enumerate_integer_points(Region(box)))
