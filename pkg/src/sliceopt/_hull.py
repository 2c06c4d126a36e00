"""Exact vertex sets of convex hulls of integer point sets, dimension <= 4.

Qhull proposes candidate facets; each facet plane is re-derived and checked
in exact integer arithmetic (all points weakly on one side), and vertices
are extracted by an exact active-normal rank test.  A verified supporting
plane set certifies vertices with no false positives; any inconsistency
with Qhull's own vertex list triggers an exact brute-force facet
enumeration instead, so the result never depends on floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

try:
    import numpy as _np
    from scipy.spatial import ConvexHull as _ConvexHull
    from scipy.spatial import QhullError as _QhullError
except Exception:  # pragma: no cover - scipy is a declared dependency
    _np = None

_BRUTE_FORCE_LIMIT = 400


def hull_vertices(points) -> list[tuple[int, ...]]:
    """Vertices of conv(points), sorted lexicographically. Exact."""
    pts = sorted(set(tuple(int(v) for v in p) for p in points))
    if len(pts) <= 2:
        return pts
    rank, cols = _affine_rank_and_pivots(pts)
    if rank == 1:
        j = next(c for c in range(len(pts[0])) if pts[0][c] != pts[-1][c])
        ends = {min(pts, key=lambda p: p[j]), max(pts, key=lambda p: p[j])}
        return sorted(ends)
    proj = [tuple(p[c] for c in cols) for p in pts]
    if rank == 2:
        chain = set(_monotone_chain(proj))
        return sorted(p for p, q in zip(pts, proj) if q in chain)
    idx = _full_dim_vertex_indices(proj, rank)
    return sorted(pts[i] for i in idx)


def _affine_rank_and_pivots(pts) -> tuple[int, list[int]]:
    """Rank of the affine span and coordinate columns projecting it
    injectively (the pivot columns of the difference matrix)."""
    n = len(pts[0])
    base = pts[0]
    rows = [[Fraction(p[j] - base[j]) for j in range(n)] for p in pts[1:]]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col]
        rows[r] = [v / inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == n:
            break
    return r, pivots


def _cross2(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _monotone_chain(pts2d) -> list[tuple[int, int]]:
    """Strict convex hull vertices of sorted distinct 2-d integer points."""
    pts = sorted(set(pts2d))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _det(m) -> int:
    k = len(m)
    if k == 1:
        return m[0][0]
    if k == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    acc = 0
    for j in range(k):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _det(minor)
        acc += term if j % 2 == 0 else -term
    return acc


def _normal_through(simplex_pts, d) -> tuple[int, ...] | None:
    """Integer normal of the hyperplane through d points, or None if the
    points are affinely dependent."""
    base = simplex_pts[0]
    diffs = [[p[j] - base[j] for j in range(d)] for p in simplex_pts[1:]]
    normal = []
    for j in range(d):
        minor = [row[:j] + row[j + 1 :] for row in diffs]
        cof = _det(minor)
        normal.append(cof if j % 2 == 0 else -cof)
    if all(v == 0 for v in normal):
        return None
    g = math.gcd(*normal)
    return tuple(v // g for v in normal)


def _classify_plane(pts, normal, base_idx):
    """Return outward-oriented (normal, b) if the plane through pts[base_idx]
    supports all points, else None."""
    b = sum(c * x for c, x in zip(normal, pts[base_idx]))
    lo = hi = 0
    for p in pts:
        s = sum(c * x for c, x in zip(normal, p)) - b
        if s > 0:
            hi = 1
        elif s < 0:
            lo = -1
        if lo and hi:
            return None
    if hi == 0:
        return _plane_key(normal, b)
    return _plane_key(tuple(-v for v in normal), -b)


def _plane_key(normal, b):
    g = math.gcd(*normal, b)
    if g > 1:
        normal = tuple(v // g for v in normal)
        b //= g
    return normal, b


def _int_rank(vectors, d) -> int:
    rows = [[Fraction(v) for v in vec] for vec in vectors]
    r = 0
    for col in range(d):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col]
        rows[r] = [v / inv for v in rows[r]]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        r += 1
        if r == d:
            break
    return r


def _vertex_indices_from_planes(pts, planes, d) -> list[int]:
    out = []
    for i, x in enumerate(pts):
        active = [
            normal
            for normal, b in planes
            if sum(c * v for c, v in zip(normal, x)) == b
        ]
        if len(active) >= d and _int_rank(active, d) == d:
            out.append(i)
    return out


def _qhull_candidates(pts, d):
    """(verified outward planes, Qhull's vertex indices) or None on any
    exact-verification failure."""
    if _np is None:
        return None
    try:
        hull = _ConvexHull(_np.asarray(pts, dtype=float), qhull_options="Qt")
    except (_QhullError, ValueError):
        return None
    planes = set()
    for simplex in hull.simplices:
        spts = [pts[i] for i in simplex]
        normal = _normal_through(spts, d)
        if normal is None:
            continue
        key = _classify_plane(pts, normal, simplex[0])
        if key is None:
            return None
        planes.add(key)
    return planes, set(int(i) for i in hull.vertices)


def _brute_force_planes(pts, d):
    if len(pts) > _BRUTE_FORCE_LIMIT:
        raise RuntimeError(
            f"exact hull fallback not feasible for {len(pts)} points"
        )
    planes = set()
    for subset in combinations(range(len(pts)), d):
        normal = _normal_through([pts[i] for i in subset], d)
        if normal is None:
            continue
        key = _classify_plane(pts, normal, subset[0])
        if key is not None:
            planes.add(key)
    return planes


def _full_dim_vertex_indices(pts, d) -> list[int]:
    if len(pts) <= d + 1:
        return list(range(len(pts)))
    cand = _qhull_candidates(pts, d)
    if cand is not None:
        planes, qhull_vertices = cand
        idx = _vertex_indices_from_planes(pts, planes, d)
        if qhull_vertices.issubset(idx):
            return idx
    planes = _brute_force_planes(pts, d)
    return _vertex_indices_from_planes(pts, planes, d)
