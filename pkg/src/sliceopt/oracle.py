"""Brute-force ground truth and exact verification of approximation
guarantees.

The verifier has no tolerance knob: objective values are exact, so the
sign-dependent inequalities are checked by cross-multiplied rational (or
surd-scaled) comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .driver import SolveReport
from .exactnum import ExactValue, value_compare, value_le_scaled
from .polytope import DEFAULT_CELL_BUDGET, Polytope, Region, enumerate_integer_points


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking a report against the exact optimum."""

    passed: bool
    case: str  # positive-opt | negative-opt | zero-opt
    exact_value: ExactValue
    reported_value: ExactValue
    slack: Optional[Fraction]
    reason: str = ""


def brute_force_min(
    p: Polytope,
    f_eval,
    points=None,
    budget: int = DEFAULT_CELL_BUDGET,
):
    """Exact argmin of f over the integer points, lexicographic tie-break;
    None when there are no integer points."""
    if points is None:
        points = enumerate_integer_points(Region(p), budget)
    best = None
    for x in points:
        val = f_eval(x)
        if best is None or value_compare(val, best[1]) < 0:
            best = (x, val)
    return best


def verify_epsilon(
    report: SolveReport,
    exact: tuple[tuple[int, ...], ExactValue],
    epsilon,
    p: Polytope | None = None,
) -> Verdict:
    """Check the sign-dependent approximation trichotomy exactly.

    positive optimum: reported <= (1+eps) * optimum;
    negative optimum: reported <= optimum / (1+eps);
    zero optimum: reported value must be exactly zero.
    When `p` is given, feasibility of the reported point is re-checked.
    """
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    opt_x, opt_val = exact
    sign = value_compare(opt_val, 0)
    case = {1: "positive-opt", -1: "negative-opt", 0: "zero-opt"}[sign]
    if not report.solved or report.x is None:
        return Verdict(False, case, opt_val, report.value, None, "report not solved")
    if p is not None and not p.contains(report.x):
        return Verdict(False, case, opt_val, report.value, None, "reported point infeasible")
    rep_val = report.value

    if sign == 0:
        ok = value_compare(rep_val, 0) == 0
        slack = Fraction(0) if ok else None
        return Verdict(ok, case, opt_val, rep_val, slack, "" if ok else "nonzero at zero optimum")
    if sign > 0:
        factor = 1 + eps
    else:
        factor = Fraction(1) / (1 + eps)
    ok = value_le_scaled(rep_val, factor, opt_val)
    slack = None
    if not isinstance(rep_val, tuple) and not _is_surd(rep_val) and not _is_surd(opt_val):
        slack = factor * Fraction(opt_val) - Fraction(rep_val)
    return Verdict(ok, case, opt_val, rep_val, slack, "" if ok else "bound violated")


def _is_surd(value) -> bool:
    from .exactnum import Surd

    return isinstance(value, Surd)
