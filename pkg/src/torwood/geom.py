"""Exact integer geometry: orientation predicates, segment intersection, lattice reduction.

All inputs are integer tuples; no floating point is used anywhere on a
correctness path.
"""

from __future__ import annotations

from math import gcd
from typing import Tuple

Vec2 = Tuple[int, int]
Vec3 = Tuple[int, int, int]


def cross2(a: Vec2, b: Vec2) -> int:
    return a[0] * b[1] - a[1] * b[0]


def orient2d(o: Vec2, a: Vec2, b: Vec2) -> int:
    """Sign of the signed area of triangle (o, a, b): +1 ccw, -1 cw, 0 collinear."""
    x = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    return (x > 0) - (x < 0)


def sub3(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def add3(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def scale3(a: Vec3, k: int) -> Vec3:
    return (a[0] * k, a[1] * k, a[2] * k)


def cross3(a: Vec3, b: Vec3) -> Vec3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def dot3(a: Vec3, b: Vec3) -> int:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def vmax3(a: Vec3, b: Vec3) -> Vec3:
    return (max(a[0], b[0]), max(a[1], b[1]), max(a[2], b[2]))


def vmin3(a: Vec3, b: Vec3) -> Vec3:
    return (min(a[0], b[0]), min(a[1], b[1]), min(a[2], b[2]))


def _on_segment_1d(a: int, b: int, x: int) -> bool:
    return min(a, b) <= x <= max(a, b)


def segments_conflict_2d(p: Vec2, q: Vec2, r: Vec2, s: Vec2) -> bool:
    """True iff closed segments pq and rs share a point that is not a common endpoint.

    Touching endpoint-to-endpoint is allowed; any other contact (proper
    crossing, T-contact, collinear overlap) is a conflict.
    """
    if max(p[0], q[0]) < min(r[0], s[0]) or max(r[0], s[0]) < min(p[0], q[0]):
        return False
    if max(p[1], q[1]) < min(r[1], s[1]) or max(r[1], s[1]) < min(p[1], q[1]):
        return False
    o1 = orient2d(p, q, r)
    o2 = orient2d(p, q, s)
    o3 = orient2d(r, s, p)
    o4 = orient2d(r, s, q)
    if o1 == o2 == 0:
        # collinear: conflict unless the overlap is a single shared endpoint
        pts = {p, q} & {r, s}
        if len(pts) >= 2:
            return True
        lo1, hi1 = sorted((p, q))
        lo2, hi2 = sorted((r, s))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo > hi:
            return False
        if lo == hi:
            return not (lo in (p, q) and lo in (r, s))
        return True
    if o1 != o2 and o3 != o4 and o1 * o2 <= 0 and o3 * o4 <= 0:
        # single intersection point; allow only endpoint-endpoint touch
        return not (p == r or p == s or q == r or q == s)
    # touching cases: an endpoint of one segment lying on the other
    for x, (u, v) in ((r, (p, q)), (s, (p, q)), (p, (r, s)), (q, (r, s))):
        if (
            orient2d(u, v, x) == 0
            and _on_segment_1d(u[0], v[0], x[0])
            and _on_segment_1d(u[1], v[1], x[1])
            and not (x in (p, q) and x in (r, s))
        ):
            return True
    return False


def _point_on_line_3d(a: Vec3, b: Vec3, x: Vec3) -> bool:
    """True iff x lies on the (infinite) line through a and b (a != b)."""
    return cross3(sub3(b, a), sub3(x, a)) == (0, 0, 0)


def segments_conflict_3d(a: Vec3, b: Vec3, c: Vec3, d: Vec3) -> bool:
    """True iff closed 3D segments ab and cd share a point other than a common endpoint."""
    for i in range(3):
        if max(a[i], b[i]) < min(c[i], d[i]) or max(c[i], d[i]) < min(a[i], b[i]):
            return False
    d1 = sub3(b, a)
    d2 = sub3(d, c)
    r = sub3(c, a)
    n = cross3(d1, d2)
    if n == (0, 0, 0):
        # parallel; possibly collinear
        if d1 == (0, 0, 0) or d2 == (0, 0, 0):
            # at least one degenerate point-segment
            if d1 == (0, 0, 0) and d2 == (0, 0, 0):
                return False  # two points; equal points count as shared endpoints
            pt, (u, v) = (a, (c, d)) if d1 == (0, 0, 0) else (c, (a, b))
            if not _point_on_line_3d(u, v, pt):
                return False
            k = max(range(3), key=lambda i: abs(sub3(v, u)[i]))
            if not _on_segment_1d(u[k], v[k], pt[k]):
                return False
            return pt != u and pt != v
        if cross3(d1, r) != (0, 0, 0):
            return False
        k = max(range(3), key=lambda i: abs(d1[i]))
        lo1, hi1 = sorted((a[k], b[k]))
        lo2, hi2 = sorted((c[k], d[k]))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo > hi:
            return False
        if lo == hi:
            # single touching point: allowed only as a shared endpoint
            shared = any(x[k] == lo for x in (a, b)) and any(x[k] == lo for x in (c, d))
            endpoint = any(x[k] == lo and x in (c, d) for x in (a, b))
            return shared and not endpoint
        return True
    if dot3(n, r) != 0:
        return False  # skew
    # coplanar, non-parallel: solve 2D in the best projection plane
    k = max(range(3), key=lambda i: abs(n[i]))
    ii, jj = [i for i in range(3) if i != k]
    p2 = (a[ii], a[jj])
    q2 = (b[ii], b[jj])
    r2 = (c[ii], c[jj])
    s2 = (d[ii], d[jj])
    return segments_conflict_2d(p2, q2, r2, s2)


def norm2_3(a: Vec3) -> int:
    return a[0] * a[0] + a[1] * a[1] + a[2] * a[2]


def gauss_reduce(u: Vec3, v: Vec3) -> Tuple[Vec3, Vec3]:
    """Shortest basis (by Euclidean norm) of the rank-2 lattice spanned by u, v."""
    u, v = (u, v) if norm2_3(u) <= norm2_3(v) else (v, u)
    while True:
        nu = norm2_3(u)
        if nu == 0:
            raise ValueError("degenerate lattice")
        d = dot3(u, v)
        # nearest integer to d/nu, exact
        t = (2 * d + nu) // (2 * nu) if d >= 0 else -((2 * -d + nu) // (2 * nu))
        v = sub3(v, scale3(u, t))
        if norm2_3(v) >= nu:
            return u, v
        u, v = v, u


def primitive2(a: Vec2) -> Vec2:
    g = gcd(a[0], a[1])
    return a if g in (0, 1) else (a[0] // g, a[1] // g)
