"""Exact congruence decomposition of symmetric integer matrices.

Produces integral S, diagonal D and a positive scalar c with
S * D * S^T = c^3 * Q, by rational symmetric elimination.  The inertia of
Q is read off the diagonal D (congruence preserves it).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class SymMatrix:
    """Symmetric integer matrix.

    A non-symmetric input is symmetrized as Q + Q^T; when all entries of
    that sum are even it is halved back to (Q + Q^T)/2, otherwise the
    doubled matrix is kept and `doubled` records that objective values
    are scaled by 2.
    """

    __slots__ = ("n", "rows", "doubled")

    def __init__(self, rows) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        self.doubled = False
        if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(i)):
            summed = tuple(
                tuple(rows[i][j] + rows[j][i] for j in range(n)) for i in range(n)
            )
            if all(v % 2 == 0 for row in summed for v in row):
                rows = tuple(tuple(v // 2 for v in row) for row in summed)
            else:
                rows = summed
                self.doubled = True
        self.n = n
        self.rows = rows

    def __eq__(self, other) -> bool:
        return isinstance(other, SymMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"SymMatrix({list(map(list, self.rows))})"

    def neg(self) -> "SymMatrix":
        return SymMatrix(tuple(tuple(-v for v in row) for row in self.rows))


@dataclass(frozen=True)
class Decomposition:
    """Integral congruence data: S * D * S^T = c^3 * Q exactly.

    The i-th linear form of the induced sum-of-squares expression is the
    i-th *column* of S: c^3 * x^T Q x = sum_i d_i * (S[:,i] . x)^2.
    """

    s: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    c: int

    @property
    def n(self) -> int:
        return len(self.d)

    def form(self, i: int) -> tuple[int, ...]:
        """Coefficient vector of the i-th form (column i of S)."""
        return tuple(self.s[j][i] for j in range(self.n))

    @property
    def forms(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.form(i) for i in range(self.n))

    def form_value(self, i: int, x) -> int:
        return sum(self.s[j][i] * x[j] for j in range(self.n))

    def inertia(self) -> tuple[int, int, int]:
        plus = sum(1 for v in self.d if v > 0)
        minus = sum(1 for v in self.d if v < 0)
        return plus, minus, len(self.d) - plus - minus


def decompose(q: SymMatrix) -> Decomposition:
    """Exact rational symmetric elimination with diagonal pivoting.

    Pivot is the largest-magnitude remaining diagonal entry; an all-zero
    diagonal with a nonzero off-diagonal entry is repaired by the
    congruence x_i -> x_i + x_j, which makes A[i][i] nonzero.  The
    returned decomposition is verified by exact multiplication.
    """
    n = q.n
    a = [[Fraction(v) for v in row] for row in q.rows]
    s = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]

    for k in range(n):
        while True:
            piv = max(range(k, n), key=lambda i: abs(a[i][i]))
            if a[piv][piv] != 0:
                break
            shear = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0),
                None,
            )
            if shear is None:
                piv = None  # trailing block is zero; remaining d entries are 0
                break
            i, j = shear
            for col in range(n):
                a[i][col] += a[j][col]
            for row in range(n):
                a[row][i] += a[row][j]
            for row in range(n):
                s[row][j] -= s[row][i]
        if piv is None:
            break
        if piv != k:
            a[piv], a[k] = a[k], a[piv]
            for row in a:
                row[piv], row[k] = row[k], row[piv]
            for row in s:
                row[piv], row[k] = row[k], row[piv]
        for r in range(k + 1, n):
            m = a[r][k] / a[k][k]
            if m == 0:
                continue
            for col in range(n):
                a[r][col] -= m * a[k][col]
            for row in range(n):
                a[row][r] -= m * a[row][k]
            for row in range(n):
                s[row][k] += m * s[row][r]

    d = [a[i][i] for i in range(n)]
    c = 1
    for row in s:
        for v in row:
            c = math.lcm(c, v.denominator)
    for v in d:
        c = math.lcm(c, v.denominator)

    s_int = tuple(tuple(int(v * c) for v in row) for row in s)
    d_int = tuple(int(v * c) for v in d)
    dec = Decomposition(s_int, d_int, c)
    _verify(dec, q)
    return dec


def _verify(dec: Decomposition, q: SymMatrix) -> None:
    n = q.n
    c3 = dec.c**3
    for i in range(n):
        for j in range(n):
            acc = sum(dec.s[i][t] * dec.d[t] * dec.s[j][t] for t in range(n))
            if acc != c3 * q.rows[i][j]:
                raise AssertionError("decomposition identity S D S^T = c^3 Q failed")


def inertia(q: SymMatrix) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts via Sylvester's law."""
    return decompose(q).inertia()


def reorder_for_one_negative(dec: Decomposition) -> Decomposition:
    """Permute so the unique negative diagonal entry (if any) comes last.

    Rejects decompositions with two or more negative entries; callers
    handling the one-positive case must negate the matrix first.
    """
    neg = [i for i, v in enumerate(dec.d) if v < 0]
    if len(neg) > 1:
        raise ValueError("more than one negative diagonal entry")
    n = dec.n
    if not neg or neg[0] == n - 1:
        return dec
    order = [i for i in range(n) if i != neg[0]] + [neg[0]]
    d = tuple(dec.d[i] for i in order)
    s = tuple(tuple(row[i] for i in order) for row in dec.s)
    return Decomposition(s, d, dec.c)
