"""Exact linear-programming helpers for tiny systems (n <= 4, few rows).

Everything works by brute-force basis enumeration over rational vertices,
which is exact and fast at this scale; no simplex or floating point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def solve_square(rows, rhs):
    """Solve an n x n rational system exactly; None if singular."""
    n = len(rows)
    a = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col]
        a[col] = [v / inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return tuple(a[i][n] for i in range(n))


def basic_vertices(rows, rhs, n):
    """All basic feasible points of {x : rows . x <= rhs}, deduplicated.

    For a bounded nonempty polyhedron this is exactly its vertex set.
    """
    m = len(rows)
    if m < n:
        return []
    seen = set()
    out = []
    for subset in combinations(range(m), n):
        point = solve_square([rows[i] for i in subset], [rhs[i] for i in subset])
        if point is None or point in seen:
            continue
        if all(
            sum(c * x for c, x in zip(rows[i], point)) <= rhs[i] for i in range(m)
        ):
            seen.add(point)
            out.append(point)
    return out


def recession_cone_is_trivial(rows, n) -> bool:
    """Whether {d : rows . d <= 0} = {0}, tested exactly.

    The cone is intersected with the unit box; it is nontrivial iff some
    vertex of that polytope touches the box boundary.
    """
    all_rows = [tuple(row) for row in rows]
    all_rhs = [Fraction(0)] * len(all_rows)
    for i in range(n):
        e_hi = tuple(1 if j == i else 0 for j in range(n))
        e_lo = tuple(-1 if j == i else 0 for j in range(n))
        all_rows += [e_hi, e_lo]
        all_rhs += [Fraction(1), Fraction(1)]
    for vertex in basic_vertices(all_rows, all_rhs, n):
        if any(abs(v) == 1 for v in vertex):
            return False
    return True


def linear_range(rows, rhs, n, coeffs, offset=0):
    """Exact (min, max) of coeffs . x + offset over {rows . x <= rhs}.

    Requires the polyhedron to be bounded; returns None when empty.
    """
    vertices = basic_vertices(rows, rhs, n)
    if not vertices:
        return None
    values = [sum(c * x for c, x in zip(coeffs, v)) + offset for v in vertices]
    return min(values), max(values)
