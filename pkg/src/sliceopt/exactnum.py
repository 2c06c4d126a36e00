"""Exact arithmetic for integers, rationals, and quadratic surds sqrt(p) + q.

All comparisons are decided by integer case analysis (repeated squaring),
never by floating point, so argmin selection downstream is rounding-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

# Exact value types accepted by evaluators and comparators throughout the
# package: arbitrary-precision int, Fraction, or Surd.
ExactValue = Union[int, Fraction, "Surd"]


@dataclass(frozen=True)
class Surd:
    """The real number sqrt(p) + q with integers p >= 0 and q."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0:
            raise ValueError(f"surd radicand must be nonnegative, got {self.p}")

    def __repr__(self) -> str:
        return f"Surd(sqrt({self.p}){self.q:+d})"


def _cmp_sqrt_plus_int(p: int, t: int, p2: int) -> int:
    """Sign of (sqrt(p) + t) - sqrt(p2) for integers p, p2 >= 0 and t.

    At most two squaring steps; each squaring is applied only when both
    sides are known nonnegative, so the sign is preserved.
    """
    if t == 0:
        return (p > p2) - (p < p2)
    if t > 0:
        # sign of (sqrt(p)+t)^2 - p2 = w + 2t*sqrt(p), w = p + t^2 - p2
        w = p + t * t - p2
        if w >= 0:
            return 0 if (w == 0 and p == 0) else 1
        # compare 2t*sqrt(p) against |w|
        lhs = 4 * t * t * p
        rhs = w * w
        return (lhs > rhs) - (lhs < rhs)
    # t < 0: sign of p - (sqrt(p2)+|t|)^2 = w2 - 2|t|*sqrt(p2)
    w2 = p - p2 - t * t
    if w2 <= 0:
        return 0 if (w2 == 0 and p2 == 0) else -1
    lhs = w2 * w2
    rhs = 4 * t * t * p2
    return (lhs > rhs) - (lhs < rhs)


def surd_sign(a: Surd) -> int:
    """Exact sign of sqrt(a.p) + a.q, in {-1, 0, +1}."""
    return _cmp_sqrt_plus_int(a.p, a.q, 0)


def surd_compare(a: Surd, b: Surd) -> int:
    """Exact three-way comparison of two surds: -1, 0, or +1."""
    return _cmp_sqrt_plus_int(a.p, a.q - b.q, b.p)


def delta_lower_bound(radius: int) -> Fraction:
    """Separation bound: any two distinct surds with parameters bounded by
    `radius` differ by more than 1/(240 * radius^4)."""
    if radius < 1:
        raise ValueError("radius must be >= 1")
    return Fraction(1, 240 * radius**4)


def surd_value_approx(a: Surd, precision: Fraction) -> Fraction:
    """A rational r with |r - (sqrt(p) + q)| <= precision, via integer
    square root at a scale fine enough for the requested precision."""
    if precision <= 0:
        raise ValueError("precision must be positive")
    scale = (precision.denominator + precision.numerator - 1) // precision.numerator
    scale = max(scale, 1)
    return Fraction(math.isqrt(a.p * scale * scale), scale) + a.q


def _as_ratio(value) -> tuple[int, int]:
    """(numerator, positive denominator) of an int or Fraction."""
    if isinstance(value, int):
        return value, 1
    if isinstance(value, Fraction):
        return value.numerator, value.denominator
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def value_compare(u, v) -> int:
    """Exact three-way comparison of two ExactValues (int, Fraction, Surd)."""
    u_surd = isinstance(u, Surd)
    v_surd = isinstance(v, Surd)
    if u_surd and v_surd:
        return surd_compare(u, v)
    if u_surd:
        num, den = _as_ratio(v)
        # sqrt(p) + q vs num/den  <=>  sqrt(den^2 p) + (den q - num) vs 0
        return _cmp_sqrt_plus_int(den * den * u.p, den * u.q - num, 0)
    if v_surd:
        return -value_compare(v, u)
    return (u > v) - (u < v)


def value_le_scaled(u, factor: Fraction, v) -> bool:
    """Exact test of u <= factor * v for ExactValues u, v and factor > 0."""
    a, b = factor.numerator, factor.denominator
    if a <= 0:
        raise ValueError("factor must be positive")
    u_surd = isinstance(u, Surd)
    v_surd = isinstance(v, Surd)
    if u_surd and v_surd:
        # b(sqrt(p)+q) <= a(sqrt(p')+q')
        return _cmp_sqrt_plus_int(b * b * u.p, b * u.q - a * v.q, a * a * v.p) <= 0
    if u_surd:
        vn, vd = _as_ratio(v)
        # b vd (sqrt(p)+q) <= a vn
        s = b * vd
        return _cmp_sqrt_plus_int(s * s * u.p, s * u.q - a * vn, 0) <= 0
    if v_surd:
        un, ud = _as_ratio(u)
        # b un <= a ud (sqrt(p')+q')
        s = a * ud
        return _cmp_sqrt_plus_int(s * s * v.p, s * v.q - b * un, 0) >= 0
    return b * Fraction(u) <= a * Fraction(v)


def value_is_zero(u) -> bool:
    if isinstance(u, Surd):
        return surd_sign(u) == 0
    return u == 0
