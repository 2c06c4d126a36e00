import math
import random
from fractions import Fraction

import pytest

from sliceopt.exactnum import (
    Surd,
    delta_lower_bound,
    surd_compare,
    surd_sign,
    surd_value_approx,
    value_compare,
    value_is_zero,
    value_le_scaled,
)


def test_surd_sign_examples():
    assert surd_sign(Surd(4, -2)) == 0
    assert surd_sign(Surd(2, -1)) == 1
    assert surd_sign(Surd(5, -3)) == -1
    assert surd_sign(Surd(0, 0)) == 0
    assert surd_sign(Surd(0, -7)) == -1


def test_surd_compare_examples():
    assert surd_compare(Surd(4, 0), Surd(0, 2)) == 0
    assert surd_compare(Surd(5, -2), Surd(1, 0)) == -1
    assert surd_compare(Surd(2, 0), Surd(0, 1)) == 1


def test_negative_radicand_rejected():
    with pytest.raises(ValueError):
        Surd(-1, 0)


def test_delta_lower_bound_values():
    assert delta_lower_bound(1) == Fraction(1, 240)
    assert delta_lower_bound(2) == Fraction(1, 3840)
    assert delta_lower_bound(10) == Fraction(1, 2400000)
    with pytest.raises(ValueError):
        delta_lower_bound(0)


def test_value_approx():
    v = surd_value_approx(Surd(2, 0), Fraction(1, 100))
    assert abs(v - Fraction(14142135624, 10**10)) <= Fraction(1, 100)
    assert surd_value_approx(Surd(0, 7), Fraction(1, 3)) == 7
    v9 = surd_value_approx(Surd(9, -1), Fraction(1, 10))
    assert abs(v9 - 2) <= Fraction(1, 10)


def test_total_order_matches_decimal_approx():
    # ordering consistent with a fine rational approximation on random surds
    rng = random.Random(11)
    prec = Fraction(1, 10**9)
    for _ in range(10**4):
        a = Surd(rng.randint(0, 10**6), rng.randint(-(10**6), 10**6))
        b = Surd(rng.randint(0, 10**6), rng.randint(-(10**6), 10**6))
        cmp = surd_compare(a, b)
        assert cmp == -surd_compare(b, a)
        diff = surd_value_approx(a, prec) - surd_value_approx(b, prec)
        if abs(diff) > 2 * prec:
            assert cmp == (1 if diff > 0 else -1)
        assert surd_sign(a) == surd_compare(a, Surd(0, 0))


def test_separation_bound_small_radius():
    # exhaustive check at a small radius; the full-size sweep runs in the
    # acceptance suite
    radius = 5
    bound = delta_lower_bound(radius)
    scale = 10**12
    approx = {}
    for p in range(radius + 1):
        root = math.isqrt(p * scale * scale)
        for q in range(-radius, radius + 1):
            approx[(p, q)] = root + q * scale
    cutoff = bound * scale
    for key_a, va in approx.items():
        for key_b, vb in approx.items():
            if surd_compare(Surd(*key_a), Surd(*key_b)) != 0:
                assert abs(va - vb) > cutoff


def test_value_compare_mixed_types():
    assert value_compare(Surd(2, 0), Fraction(3, 2)) < 0
    assert value_compare(Surd(2, 0), 1) > 0
    assert value_compare(Surd(4, -2), 0) == 0
    assert value_compare(Fraction(1, 2), 1) < 0
    assert value_compare(3, 3) == 0
    assert value_compare(Fraction(7, 2), Surd(9, 0)) > 0


def test_value_le_scaled():
    assert value_le_scaled(Surd(9, 0), Fraction(3, 2), Surd(4, 0))
    assert not value_le_scaled(Surd(9, 1), Fraction(3, 2), Surd(4, 0))
    assert value_le_scaled(4, Fraction(2, 1), Surd(4, 0))
    assert value_le_scaled(Surd(2, 0), Fraction(3, 4), 2)
    assert value_le_scaled(Fraction(3, 2), Fraction(1, 2), 3)
    # boundary equality counts as satisfied
    assert value_le_scaled(3, Fraction(3, 2), 2)


def test_value_is_zero():
    assert value_is_zero(Surd(4, -2))
    assert value_is_zero(Fraction(0))
    assert not value_is_zero(Surd(2, -1))
