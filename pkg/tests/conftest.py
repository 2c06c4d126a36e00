import pytest

from sliceopt.cli import generate_instance
from sliceopt.oracle import brute_force_min
from sliceopt.polytope import Region, enumerate_integer_points
from sliceopt.quadform import eval_f

# Seeded instance protocol shared by several acceptance criteria: 200
# instances per one-sided inertia class, alternating n = 2 and n = 3,
# coefficients bounded by 10, box [-6, 6]^n.


def _build_set(seed_base: int, constraint: str):
    out = []
    for i in range(200):
        n = 2 if i % 2 == 0 else 3
        inst = generate_instance(seed_base + i, n, constraint, 10, 6)
        q, p = inst["q"], inst["p"]
        points = enumerate_integer_points(Region(p))
        opt = brute_force_min(p, lambda x, q=q: eval_f(q, x), points=points)
        out.append((q, p, points, opt))
    return out


@pytest.fixture(scope="session")
def one_negative_set():
    return _build_set(1000, "one-negative")


@pytest.fixture(scope="session")
def one_positive_set():
    return _build_set(5000, "one-positive")
