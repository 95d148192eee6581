"""Exact planar geometry over the rationals.

Coordinates are ``gmpy2.mpq`` rationals and nothing is ever rounded.
Degenerate convex sets (a single point, a segment) are ordinary values: a
:class:`ConvexPolygon` carries its rank and every operation accepts all three
ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from gmpy2 import mpq

Rational = type(mpq())


def rational(value) -> Rational:
    """Coerce ``value`` to an exact rational.

    Integers, Fractions and strings such as ``"3/4"`` or ``"0.25"`` are
    accepted.  Floats are refused: they usually carry a binary rounding error
    the caller did not mean to keep.
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return rational(Fraction(value.strip()))
    raise TypeError(f"cannot use {type(value).__name__} as an exact coordinate")


class Point2(NamedTuple):
    x: Rational
    y: Rational

    @classmethod
    def of(cls, x, y) -> "Point2":
        return cls(rational(x), rational(y))

    def __str__(self):
        return f"({self.x}, {self.y})"


class Point3(NamedTuple):
    x: Rational
    y: Rational
    z: Rational

    @classmethod
    def of(cls, x, y, z) -> "Point3":
        return cls(rational(x), rational(y), rational(z))

    @property
    def xy(self) -> Point2:
        return Point2(self.x, self.y)

    @classmethod
    def lift(cls, q: Point2, z) -> "Point3":
        return cls(q.x, q.y, rational(z))

    def __str__(self):
        return f"({self.x}, {self.y}, {self.z})"


class Segment2(NamedTuple):
    a: Point2
    b: Point2


def as_point2(p) -> Point2:
    if isinstance(p, Point2):
        return p
    x, y = p
    return Point2.of(x, y)


def as_point3(p) -> Point3:
    if isinstance(p, Point3):
        return p
    x, y, z = p
    return Point3.of(x, y, z)


def cross(o: Point2, a: Point2, b: Point2) -> Rational:
    """Twice the signed area of the triangle ``o, a, b``."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(a: Point2, b: Point2, c: Point2) -> int:
    """+1 for a left turn a -> b -> c, -1 for a right turn, 0 if collinear."""
    d = cross(a, b, c)
    return (d > 0) - (d < 0)


def _on_segment(a: Point2, b: Point2, p: Point2) -> bool:
    # assumes p collinear with a, b
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


@dataclass(frozen=True)
class ConvexPolygon:
    """A compact convex planar set given by its extreme points.

    ``vertices`` run counter-clockwise starting from the lexicographically
    smallest vertex, so two polygons describing the same set compare equal.
    Use :func:`convex_hull_2d` to build one from arbitrary points.
    """

    vertices: tuple

    @property
    def rank(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def edges(self):
        v = self.vertices
        if len(v) == 1:
            return []
        if len(v) == 2:
            return [Segment2(v[0], v[1])]
        return [Segment2(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def __contains__(self, p) -> bool:
        return point_in_polygon(self, p)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def convex_hull_2d(points: Iterable) -> ConvexPolygon:
    """Convex hull by Andrew's monotone chain.

    Points lying on the relative interior of an edge are dropped, so the
    result lists exactly the extreme points of the input.
    """
    pts = sorted({as_point2(p) for p in points})
    if not pts:
        raise ValueError("convex hull of an empty point set")
    if len(pts) <= 2:
        return ConvexPolygon(tuple(pts))

    def half(seq):
        chain = []
        for p in seq:
            px, py = p
            while len(chain) >= 2:
                (ax, ay), (bx, by) = chain[-2], chain[-1]
                if (bx - ax) * (py - ay) - (by - ay) * (px - ax) > 0:
                    break
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    ring = lower[:-1] + upper[:-1]
    return ConvexPolygon(tuple(ring))


def point_in_polygon(poly: ConvexPolygon, p) -> bool:
    """Closed membership test, boundary included."""
    p = as_point2(p)
    v = poly.vertices
    if len(v) == 1:
        return p == v[0]
    if len(v) == 2:
        return cross(v[0], v[1], p) == 0 and _on_segment(v[0], v[1], p)
    n = len(v)
    for i in range(n):
        if cross(v[i], v[(i + 1) % n], p) < 0:
            return False
    return True


def segment_intersection_point(s1: Segment2, s2: Segment2) -> Optional[Point2]:
    """The intersection of two closed segments if it is a single point.

    Returns None when the segments are disjoint and also when they overlap
    along a stretch of positive length.
    """
    a, b = s1
    c, d = s2
    rx, ry = b.x - a.x, b.y - a.y
    sx, sy = d.x - c.x, d.y - c.y
    denom = rx * sy - ry * sx
    if denom == 0:
        if cross(a, b, c) != 0:
            return None
        # collinear: the overlap is a single point only if they touch at an end
        shared = {p for p in (a, b) if _on_segment(c, d, p)} | {
            p for p in (c, d) if _on_segment(a, b, p)
        }
        return shared.pop() if len(shared) == 1 else None
    qx, qy = c.x - a.x, c.y - a.y
    t = (qx * sy - qy * sx) / denom
    u = (qx * ry - qy * rx) / denom
    if 0 <= t <= 1 and 0 <= u <= 1:
        return Point2(a.x + t * rx, a.y + t * ry)
    return None


def convex_polygon_intersection(
    P: ConvexPolygon, Q: ConvexPolygon
) -> Optional[ConvexPolygon]:
    """Exact intersection of two convex polygons of any rank, or None.

    The extreme points of P ∩ Q are among the vertices of one polygon lying
    in the other and the pairwise crossings of their edges.
    """
    candidates = [v for v in P.vertices if point_in_polygon(Q, v)]
    candidates += [v for v in Q.vertices if point_in_polygon(P, v)]
    for e in P.edges():
        for f in Q.edges():
            x = segment_intersection_point(e, f)
            if x is not None:
                candidates.append(x)
    if not candidates:
        return None
    return convex_hull_2d(candidates)
