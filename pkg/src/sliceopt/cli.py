"""Batch command-line interface.

Instances and reports are single-line JSON documents whose integers are
decimal strings (arbitrary precision survives the round trip; floats never
appear).  Exit codes: 0 solved/verified, 1 parse or usage error,
2 infeasible, 3 unsupported inertia, 4 enumeration budget exceeded,
5 verification failed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from . import exact as exact_mod
from .driver import SolveReport
from .exactnum import Surd
from .linalg import SymMatrix, inertia
from .motzkin import minimize_motzkin, motzkin_value
from .oracle import brute_force_min, verify_epsilon
from .polytope import DEFAULT_CELL_BUDGET, BudgetExceededError, Polytope
from .quadform import UnsupportedInertiaError, eval_f, fptas_quadform

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INFEASIBLE = 2
EXIT_UNSUPPORTED = 3
EXIT_BUDGET = 4
EXIT_VERIFY_FAILED = 5


class InstanceError(Exception):
    """Malformed instance or report file."""


# ---------------------------------------------------------------------------
# serialization


def _encode_int(v: int) -> str:
    return str(int(v))


def _decode_int(v) -> int:
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise InstanceError(f"expected integer-as-string, got {v!r}")
    try:
        return int(v)
    except ValueError as exc:
        raise InstanceError(f"bad integer literal {v!r}") from exc


def _decode_fraction(v) -> Fraction:
    if not isinstance(v, str):
        raise InstanceError(f"expected rational string 'p/q', got {v!r}")
    try:
        return Fraction(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise InstanceError(f"bad rational literal {v!r}") from exc


def encode_value(v):
    if isinstance(v, Surd):
        return {"p": _encode_int(v.p), "q": _encode_int(v.q)}
    if isinstance(v, Fraction):
        return _encode_int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return _encode_int(v)


def decode_value(v):
    if isinstance(v, dict):
        return Surd(_decode_int(v["p"]), _decode_int(v["q"]))
    if isinstance(v, str) and "/" in v:
        return _decode_fraction(v)
    return _decode_int(v)


def serialize_instance(instance: dict) -> str:
    doc = {"objective": instance.get("objective", "quadform"), "n": instance["n"]}
    if instance.get("q") is not None:
        doc["Q"] = [[_encode_int(v) for v in row] for row in instance["q"].rows]
    doc["A"] = [[_encode_int(v) for v in row] for row in instance["p"].a_rows]
    doc["b"] = [_encode_int(v) for v in instance["p"].b]
    if instance.get("epsilon") is not None:
        doc["epsilon"] = str(instance["epsilon"])
    return json.dumps(doc)


def parse_instance_text(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise InstanceError("instance document must be a JSON object")
    objective = doc.get("objective", "quadform")
    if objective not in ("quadform", "motzkin"):
        raise InstanceError(f"unknown objective tag {objective!r}")
    n = _decode_int(doc.get("n"))
    q = None
    if objective == "quadform":
        if "Q" not in doc:
            raise InstanceError("quadform instance requires Q")
        rows = [[_decode_int(v) for v in row] for row in doc["Q"]]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise InstanceError("Q dimensions inconsistent with n")
        q = SymMatrix(rows)
    elif n != 2:
        raise InstanceError("motzkin objective requires n = 2")
    a_rows = [[_decode_int(v) for v in row] for row in doc.get("A", [])]
    b = [_decode_int(v) for v in doc.get("b", [])]
    if any(len(r) != n for r in a_rows):
        raise InstanceError("A row width inconsistent with n")
    try:
        p = Polytope(a_rows, b)
    except ValueError as exc:
        raise InstanceError(str(exc)) from exc
    epsilon = _decode_fraction(doc["epsilon"]) if "epsilon" in doc else None
    return {"objective": objective, "n": n, "q": q, "p": p, "epsilon": epsilon}


def load_instance(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance_text(fh.read())


def serialize_report(report: SolveReport, wall_time: float) -> str:
    doc = {
        "status": report.status,
        "mode": report.mode,
        "epsilon": str(report.epsilon),
        "cells": report.cell_count,
        "subproblems": report.subproblem_count,
        "wall_time_s": round(wall_time, 6),
    }
    if report.x is not None:
        doc["x"] = [_encode_int(v) for v in report.x]
    if report.value is not None:
        doc["value"] = encode_value(report.value)
    return json.dumps(doc)


def parse_report_text(text: str) -> SolveReport:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    x = tuple(_decode_int(v) for v in doc["x"]) if "x" in doc else None
    value = decode_value(doc["value"]) if "value" in doc else None
    return SolveReport(
        doc.get("status", "solved"),
        x,
        value,
        _decode_fraction(doc.get("epsilon", "0/1")),
        doc.get("mode", ""),
        int(doc.get("cells", 0)),
        int(doc.get("subproblems", 0)),
    )


# ---------------------------------------------------------------------------
# instance generation


_INERTIA_NAMES = {
    "one-negative": lambda p, m, z, n: m == 1,
    "one-positive": lambda p, m, z, n: p == 1,
    "psd": lambda p, m, z, n: m == 0,
    "nsd": lambda p, m, z, n: p == 0,
    "any": lambda p, m, z, n: True,
}


def generate_instance(
    seed: int,
    n: int,
    inertia_constraint: str = "any",
    coeff_bound: int = 10,
    box_bound: int = 6,
    epsilon: Fraction | None = Fraction(1, 4),
    max_tries: int = 20000,
) -> dict:
    """Deterministic random symmetric instance, rejection-sampled to the
    requested inertia, over the box [-box_bound, box_bound]^n."""
    if n > 4 or n < 1:
        raise InstanceError("generation supports 1 <= n <= 4")
    if inertia_constraint in _INERTIA_NAMES:
        accept = _INERTIA_NAMES[inertia_constraint]
    else:
        try:
            want = tuple(int(v) for v in inertia_constraint.split(","))
        except ValueError as exc:
            raise InstanceError(f"bad inertia constraint {inertia_constraint!r}") from exc
        if len(want) != 3 or sum(want) != n:
            raise InstanceError(f"inertia triple {want} inconsistent with n = {n}")
        accept = lambda p, m, z, n_: (p, m, z) == want
    rng = random.Random(seed)
    for _ in range(max_tries):
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1):
                rows[i][j] = rows[j][i] = rng.randint(-coeff_bound, coeff_bound)
        q = SymMatrix(rows)
        p_cnt, m_cnt, z_cnt = inertia(q)
        if accept(p_cnt, m_cnt, z_cnt, n):
            p = Polytope.from_box([(-box_bound, box_bound)] * n)
            return {"objective": "quadform", "n": n, "q": q, "p": p, "epsilon": epsilon}
    raise InstanceError(
        f"inertia constraint {inertia_constraint!r} unreachable in {max_tries} tries"
    )


# ---------------------------------------------------------------------------
# command driver


def _solve(mode: str, instance: dict, epsilon: Fraction, cover: str, budget: int) -> SolveReport:
    objective = instance["objective"]
    p = instance["p"]
    if objective == "motzkin":
        if mode == "oracle":
            opt = brute_force_min(p, motzkin_value, budget=budget)
            if opt is None:
                return SolveReport("infeasible", None, None, Fraction(0), "oracle")
            return SolveReport("solved", opt[0], opt[1], Fraction(0), "oracle", 0, 1)
        if mode in ("fptas", "motzkin"):
            return minimize_motzkin(p, epsilon, cover, budget)
        raise InstanceError(f"mode {mode!r} does not apply to the motzkin objective")
    q = instance["q"]
    if mode == "oracle":
        opt = brute_force_min(p, lambda x: eval_f(q, x), budget=budget)
        if opt is None:
            return SolveReport("infeasible", None, None, Fraction(0), "oracle")
        return SolveReport("solved", opt[0], opt[1], Fraction(0), "oracle", 0, 1)
    if mode == "fptas":
        return fptas_quadform(q, p, epsilon, cover_strategy=cover, budget=budget)
    if mode == "exact":
        report = exact_mod.exact_solve(q, p, budget=budget)
        if report is None:
            return SolveReport("exact-not-applicable", None, None, Fraction(0), "exact")
        return report
    if mode == "dim3":
        return exact_mod.solve_dim3(q, p, epsilon, cover_strategy=cover, budget=budget)
    raise InstanceError(f"unknown solve mode {mode!r}")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sliceopt",
        description="Exact and approximate integer minimization of quadratic "
        "and slice-decomposable objectives over bounded polytopes.",
    )
    parser.add_argument(
        "--mode",
        required=True,
        choices=["fptas", "exact", "dim3", "oracle", "verify", "generate", "motzkin"],
    )
    parser.add_argument("instance", nargs="?", help="instance JSON file")
    parser.add_argument("--epsilon", default=None, help="accuracy as 'p/q'")
    parser.add_argument("--budget", type=int, default=DEFAULT_CELL_BUDGET,
                        help="enumeration cell budget")
    parser.add_argument("--cover", choices=["points", "cells"], default="points")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default=None, help="output file")
    parser.add_argument("--report", default=None, help="report file for verify mode")
    parser.add_argument("--n", type=int, default=2, help="dimension for generate mode")
    parser.add_argument("--inertia", default="any",
                        help="inertia constraint for generate mode "
                        "(one-negative, one-positive, psd, nsd, any, or 'p,m,z')")
    parser.add_argument("--coeff-bound", type=int, default=10)
    parser.add_argument("--box", type=int, default=6,
                        help="box half-width for generate/motzkin modes")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.mode == "generate":
            eps = _decode_fraction(args.epsilon) if args.epsilon else Fraction(1, 4)
            instance = generate_instance(
                args.seed, args.n, args.inertia, args.coeff_bound, args.box, eps
            )
            _emit(serialize_instance(instance), args.out)
            return EXIT_OK

        if args.mode == "motzkin":
            eps = _decode_fraction(args.epsilon) if args.epsilon else Fraction(1, 4)
            started = time.perf_counter()
            report = minimize_motzkin(
                Polytope.from_box([(-args.box, args.box)] * 2),
                eps,
                args.cover,
                args.budget,
            )
            print(f"sanity: M(2,1) = {motzkin_value((2, 1))}")
            _emit(serialize_report(report, time.perf_counter() - started), args.out)
            return EXIT_OK if report.solved else EXIT_INFEASIBLE

        if not args.instance:
            print("error: instance file required", file=sys.stderr)
            return EXIT_PARSE
        instance = load_instance(args.instance)

        if args.mode == "verify":
            if not args.report:
                print("error: --report required for verify mode", file=sys.stderr)
                return EXIT_PARSE
            with open(args.report, "r", encoding="utf-8") as fh:
                report = parse_report_text(fh.read())
            eps = (
                _decode_fraction(args.epsilon)
                if args.epsilon
                else (instance["epsilon"] or report.epsilon)
            )
            if eps <= 0:
                print("error: positive epsilon required for verify", file=sys.stderr)
                return EXIT_PARSE
            f_eval = (
                motzkin_value
                if instance["objective"] == "motzkin"
                else lambda x: eval_f(instance["q"], x)
            )
            opt = brute_force_min(instance["p"], f_eval, budget=args.budget)
            if opt is None:
                ok = report.status == "infeasible"
                print(f"verdict: {'pass' if ok else 'fail'} (instance infeasible)")
                return EXIT_OK if ok else EXIT_VERIFY_FAILED
            verdict = verify_epsilon(report, opt, eps, instance["p"])
            print(
                f"verdict: {'pass' if verdict.passed else 'fail'} case={verdict.case} "
                f"exact={encode_value(verdict.exact_value)} "
                f"reported={encode_value(verdict.reported_value)}"
                + (f" reason={verdict.reason}" if verdict.reason else "")
            )
            return EXIT_OK if verdict.passed else EXIT_VERIFY_FAILED

        eps = (
            _decode_fraction(args.epsilon)
            if args.epsilon
            else (instance["epsilon"] or Fraction(1, 4))
        )
        started = time.perf_counter()
        report = _solve(args.mode, instance, eps, args.cover, args.budget)
        _emit(serialize_report(report, time.perf_counter() - started), args.out)
        if report.status == "infeasible":
            return EXIT_INFEASIBLE
        return EXIT_OK

    except InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except UnsupportedInertiaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
