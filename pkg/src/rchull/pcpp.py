"""Shovels and the polyconvex++ outer approximation.

A shovel is the open set ``{l(x, y) > 0, eps * (z - z0) > 0}`` for an affine
``l``.  Its complement is the zero set of a rank-one convex function, so a
point sitting in some shovel that misses ``K`` is certainly outside the
rank-one convex hull of ``K``.  :func:`pcpp_member` decides whether such a
shovel exists and returns one when it does.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from gmpy2 import mpq

from .exact import (
    ConvexPolygon,
    Point2,
    Rational,
    as_point2,
    as_point3,
    convex_hull_2d,
    point_in_polygon,
    rational,
)
from .grid import normalize_points


@dataclass(frozen=True)
class Shovel:
    a: Rational
    b: Rational
    c: Rational
    z0: Rational
    eps: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("shovel needs a non-constant planar functional")
        if self.eps not in (-1, 1):
            raise ValueError("eps must be +1 or -1")

    def l(self, q) -> Rational:
        return self.a * q[0] + self.b * q[1] + self.c

    def __contains__(self, p):
        return shovel_contains(self, p)


def shovel_contains(s: Shovel, p) -> bool:
    p = as_point3(p)
    return s.l(p) > 0 and s.eps * (p.z - s.z0) > 0


def _closest_point(poly: ConvexPolygon, q: Point2) -> Point2:
    v = poly.vertices
    if len(v) == 1:
        return v[0]
    best, best_d = None, None
    for e in poly.edges():
        dx, dy = e.b.x - e.a.x, e.b.y - e.a.y
        t = ((q.x - e.a.x) * dx + (q.y - e.a.y) * dy) / (dx * dx + dy * dy)
        t = min(max(t, mpq(0)), mpq(1))
        c = Point2(e.a.x + t * dx, e.a.y + t * dy)
        d = (q.x - c.x) ** 2 + (q.y - c.y) ** 2
        if best_d is None or d < best_d:
            best, best_d = c, d
    return best


def separating_functional(poly: Optional[ConvexPolygon], q):
    """Affine ``(a, b, c)`` with ``l(q) > 0`` and ``l < 0`` on ``poly``.

    ``poly`` may be None (nothing to separate from).  Raises ValueError if
    ``q`` lies in ``poly``.  The line is the perpendicular bisector of ``q``
    and its nearest point in ``poly``, so all coefficients stay rational.
    """
    q = as_point2(q)
    if poly is None:
        return mpq(1), mpq(0), 1 - q.x
    if point_in_polygon(poly, q):
        raise ValueError("point lies in the polygon; no separating line")
    c = _closest_point(poly, q)
    a, b = q.x - c.x, q.y - c.y
    mx, my = (q.x + c.x) / 2, (q.y + c.y) / 2
    return a, b, -(a * mx + b * my)


def z0_candidates(K, p, eps: int):
    """One representative ``z0`` per open interval cut out by the relevant
    heights, restricted to those with ``eps * (z(p) - z0) > 0``."""
    hs = sorted({k.z for k in K} | {p.z})
    reps = [hs[0] - 1]
    reps += [(lo + hi) / 2 for lo, hi in zip(hs, hs[1:])]
    reps.append(hs[-1] + 1)
    return [z0 for z0 in reps if eps * (p.z - z0) > 0]


def pcpp_member(K, p):
    """Return ``(True, None)`` if ``p`` lies in the pc++ hull of ``K``,
    otherwise ``(False, shovel)`` with a shovel containing ``p`` but no point
    of ``K``.

    Witnesses are searched with ``eps = -1`` first, then by increasing
    ``z0``, so the reported shovel is deterministic.
    """
    K = normalize_points(K)
    p = as_point3(p)
    for eps in (-1, 1):
        for z0 in z0_candidates(K, p, eps):
            side = [k.xy for k in K if eps * (k.z - z0) > 0]
            poly = convex_hull_2d(side) if side else None
            if poly is not None and point_in_polygon(poly, p.xy):
                continue
            a, b, c = separating_functional(poly, p.xy)
            return False, Shovel(a, b, c, rational(z0), eps)
    return True, None
