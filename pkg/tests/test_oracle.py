import random
from fractions import Fraction

import pytest

from sliceopt.driver import SolveReport
from sliceopt.exactnum import Surd
from sliceopt.linalg import SymMatrix
from sliceopt.motzkin import motzkin_value
from sliceopt.oracle import brute_force_min, verify_epsilon
from sliceopt.polytope import Polytope
from sliceopt.quadform import eval_f

BOX33 = Polytope.from_box([(-3, 3), (-3, 3)])


def _report(value, x=(0, 0), status="solved"):
    return SolveReport(status, x, value, Fraction(1, 4), "test")


def test_brute_force_examples():
    q = SymMatrix([[1, 0], [0, -1]])
    assert brute_force_min(BOX33, lambda x: eval_f(q, x)) == ((0, -3), -9)
    box2 = Polytope.from_box([(-2, 2), (-2, 2)])
    assert brute_force_min(box2, motzkin_value) == ((-1, -1), 0)
    empty = Polytope([(2,), (-2,)], [1, -1])
    assert brute_force_min(empty, lambda x: 0) is None


def test_verify_epsilon_cases():
    eps = Fraction(1, 4)
    assert verify_epsilon(_report(-8), ((0, 0), -9), eps).passed
    assert not verify_epsilon(_report(-7), ((0, 0), -9), eps).passed
    v = verify_epsilon(_report(1), ((0, 0), 0), eps)
    assert not v.passed and v.case == "zero-opt"
    assert verify_epsilon(_report(0), ((0, 0), 0), eps).passed
    boundary = verify_epsilon(_report(5), ((0, 0), 4), eps)
    assert boundary.passed and boundary.slack == 0
    assert not verify_epsilon(_report(6), ((0, 0), 4), eps).passed


def test_verifier_accepts_oracle_optimum_for_every_eps():
    rng = random.Random(70)
    for _ in range(50):
        opt_val = rng.randint(-50, 50)
        eps = Fraction(rng.randint(1, 40), rng.randint(1, 40))
        verdict = verify_epsilon(_report(opt_val), ((0, 0), opt_val), eps)
        assert verdict.passed


def test_verdict_monotone_in_eps():
    rng = random.Random(71)
    for _ in range(200):
        opt_val = rng.randint(-30, 30)
        if opt_val > 0:
            rep_val = opt_val + rng.randint(0, 10)
        elif opt_val < 0:
            rep_val = opt_val + rng.randint(0, 10)
        else:
            rep_val = rng.choice([0, 1])
        eps_small = Fraction(rng.randint(1, 10), 20)
        eps_large = eps_small + Fraction(rng.randint(1, 10), 10)
        small = verify_epsilon(_report(rep_val), ((0, 0), opt_val), eps_small)
        large = verify_epsilon(_report(rep_val), ((0, 0), opt_val), eps_large)
        if small.passed:
            assert large.passed


def test_feasibility_recheck():
    verdict = verify_epsilon(_report(-9, x=(9, 9)), ((0, -3), -9), Fraction(1, 4), BOX33)
    assert not verdict.passed and "infeasible" in verdict.reason
    good = verify_epsilon(_report(-9, x=(0, -3)), ((0, -3), -9), Fraction(1, 4), BOX33)
    assert good.passed


def test_unsolved_report_fails():
    rep = SolveReport("infeasible", None, None, Fraction(1, 4), "test")
    assert not verify_epsilon(rep, ((0, 0), 1), Fraction(1, 4)).passed


def test_surd_values_verified_exactly():
    # reported surd value within the case-2 window of a surd optimum
    opt = ((0, 0), Surd(2, -4))  # sqrt(2) - 4 < 0
    passing = verify_epsilon(_report(Surd(2, -4)), opt, Fraction(1, 2))
    assert passing.passed
    failing = verify_epsilon(_report(Surd(0, -1)), opt, Fraction(1, 2))
    # -1 <= (sqrt(2)-4)/(3/2) ~ -1.72 is false
    assert not failing.passed


def test_bad_epsilon():
    with pytest.raises(ValueError):
        verify_epsilon(_report(0), ((0, 0), 0), Fraction(0))
