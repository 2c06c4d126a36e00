"""Algebra of slice-decomposable nonnegative functions.

A spec carries linear forms, a variation budget `zeta`, and an exact
evaluator.  Within any band cell built at ratio 1 + eps/zeta the function
varies by at most a factor 1 + eps; the closure operations (scaling, sum,
product, reciprocal) preserve this with zeta combined as max resp. 4*max.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exactnum import ExactValue, Surd, value_compare, value_le_scaled
from .polytope import DEFAULT_CELL_BUDGET, Polytope, Region, enumerate_integer_points
from .slicing import SliceParams, canonical_key

# Constructions whose combined zeta would exceed this are rejected rather
# than silently producing uselessly fine slicings.
ZETA_CAP = 64


@dataclass(frozen=True)
class SliceableSpec:
    """Slicing forms, variation budget, and a nonnegative exact evaluator."""

    offsets: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    zeta: int
    evaluator: Callable[[tuple[int, ...]], ExactValue]
    label: str = ""

    def __post_init__(self) -> None:
        if self.zeta < 1:
            raise ValueError("zeta must be >= 1")
        if len(self.offsets) != len(self.rows):
            raise ValueError("offset/row count mismatch")

    def __call__(self, x) -> ExactValue:
        return self.evaluator(x)


def constant(value) -> SliceableSpec:
    value = Fraction(value)
    if value < 0:
        raise ValueError("constant spec must be nonnegative")
    return SliceableSpec((), (), 1, lambda x: value, label=f"const({value})")


def even_power_form(coeffs, offset: int = 0, power: int = 2) -> SliceableSpec:
    """(coeffs . x + offset)^power for even power 2d, with zeta = 3d.

    The cube-root margin makes the band ratio (1 + eps/(3d)) small enough
    that the 2d-th power varies by at most 1 + eps within a band, for all
    eps <= 1.
    """
    if power < 2 or power % 2:
        raise ValueError("power must be a positive even integer")
    coeffs = tuple(int(c) for c in coeffs)
    offset = int(offset)

    def evaluate(x):
        return (sum(c * v for c, v in zip(coeffs, x)) + offset) ** power

    zeta = 3 * (power // 2)
    return SliceableSpec((offset,), (coeffs,), zeta, evaluate, label=f"form^{power}")


def even_power_product(terms) -> SliceableSpec:
    """Product of even powers of linear forms, one slicing form per factor:
    terms is [(coeffs, offset, power), ...] with every power even.

    zeta = 3 * (total degree / 2), by the same margin argument as for a
    single factor: every factor varies by at most the band ratio in
    magnitude, so the product varies by at most ratio^degree.
    """
    cleaned = []
    degree = 0
    for coeffs, offset, power in terms:
        if power < 2 or power % 2:
            raise ValueError("powers must be positive even integers")
        cleaned.append((tuple(int(c) for c in coeffs), int(offset), power))
        degree += power
    if not cleaned:
        raise ValueError("at least one factor required")

    def evaluate(x):
        acc = 1
        for coeffs, offset, power in cleaned:
            acc *= (sum(c * v for c, v in zip(coeffs, x)) + offset) ** power
        return acc

    return SliceableSpec(
        tuple(t[1] for t in cleaned),
        tuple(t[0] for t in cleaned),
        3 * (degree // 2),
        evaluate,
        label="form-product",
    )


def _require_rational(value, label: str):
    if isinstance(value, Surd):
        raise TypeError(
            f"{label}: combining surd-valued evaluators is unsupported; "
            "use the single-product driver path instead"
        )
    return value


def scale(lam, s: SliceableSpec) -> SliceableSpec:
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError("scaling factor must be nonnegative")
    return SliceableSpec(
        s.offsets,
        s.rows,
        s.zeta,
        lambda x: lam * _require_rational(s.evaluator(x), "scale"),
        label=f"{lam}*{s.label}",
    )


def add(s: SliceableSpec, r: SliceableSpec, zeta_cap: int = ZETA_CAP) -> SliceableSpec:
    zeta = max(s.zeta, r.zeta)
    if zeta > zeta_cap:
        raise ValueError(f"combined zeta {zeta} exceeds cap {zeta_cap}")
    return SliceableSpec(
        s.offsets + r.offsets,
        s.rows + r.rows,
        zeta,
        lambda x: _require_rational(s.evaluator(x), "add")
        + _require_rational(r.evaluator(x), "add"),
        label=f"({s.label}+{r.label})",
    )


def multiply(s: SliceableSpec, r: SliceableSpec, zeta_cap: int = ZETA_CAP) -> SliceableSpec:
    zeta = 4 * max(s.zeta, r.zeta)
    if zeta > zeta_cap:
        raise ValueError(f"combined zeta {zeta} exceeds cap {zeta_cap}")
    return SliceableSpec(
        s.offsets + r.offsets,
        s.rows + r.rows,
        zeta,
        lambda x: _require_rational(s.evaluator(x), "multiply")
        * _require_rational(r.evaluator(x), "multiply"),
        label=f"({s.label}*{r.label})",
    )


def reciprocal(s: SliceableSpec) -> SliceableSpec:
    """1/s with the same forms and zeta; s must be strictly positive on the
    intended domain (a zero surfaces as a division error)."""

    def evaluate(x):
        value = _require_rational(s.evaluator(x), "reciprocal")
        if value == 0:
            raise ZeroDivisionError(f"reciprocal of {s.label or 'spec'} at zero {x}")
        return Fraction(1) / Fraction(value)

    return SliceableSpec(s.offsets, s.rows, s.zeta, evaluate, label=f"1/{s.label}")


def check_sliceable(
    spec: SliceableSpec,
    p: Polytope,
    epsilon: Fraction,
    trials: int | None = None,
    seed: int = 0,
    budget: int = DEFAULT_CELL_BUDGET,
):
    """Test the defining inequality s(x) <= (1+eps) s(y) on integer-point
    pairs of P sharing a canonical slice key at ratio 1 + eps/zeta.

    Exhaustive over all same-slice ordered pairs when `trials` is None,
    else a seeded sample of that many pairs.  Returns None on success or
    the first violating pair (x, y).  Raises if the evaluator produces a
    negative value.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    points = enumerate_integer_points(Region(p), budget)
    values = {}
    for x in points:
        v = spec.evaluator(x)
        if value_compare(v, 0) < 0:
            raise ValueError(f"evaluator is negative at {x}: not sliceable input")
        values[x] = v
    if not spec.rows:
        groups = {(): points}
    else:
        params = SliceParams(spec.offsets, spec.rows, 1 + epsilon / spec.zeta)
        groups: dict = {}
        for x in points:
            groups.setdefault(canonical_key(x, params).k, []).append(x)
    factor = 1 + epsilon
    if trials is None:
        for members in groups.values():
            for x in members:
                for y in members:
                    if not value_le_scaled(values[x], factor, values[y]):
                        return x, y
        return None
    rng = random.Random(seed)
    rich = [g for g in groups.values() if len(g) >= 2]
    if not rich:
        return None
    for _ in range(trials):
        members = rng.choice(rich)
        x, y = rng.choice(members), rng.choice(members)
        if not value_le_scaled(values[x], factor, values[y]):
            return x, y
    return None
