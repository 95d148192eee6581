"""The finite grid the elimination algorithm runs on.

For a finite ``K`` in R^3, ``F`` is its shadow on the horizontal plane and
``H`` its set of heights.  The first derived set ``F1`` collects the points
off ``F`` where two segments with endpoints in ``F`` cross.  The grid is
``(F | F1) x H``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import lcm

from gmpy2 import mpq

from .exact import Point2, Point3, as_point2, as_point3


def normalize_points(K) -> frozenset:
    """Deduplicate and convert an iterable of 3-tuples to Point3."""
    pts = frozenset(as_point3(p) for p in K)
    if not pts:
        raise ValueError("the input point set is empty")
    return pts


def project(K):
    """Return ``(F, H)``: the planar shadow (a frozenset) and the sorted heights."""
    K = normalize_points(K)
    F = frozenset(p.xy for p in K)
    H = tuple(sorted({p.z for p in K}))
    return F, H


def _scaled(F):
    # integer coordinates sharing one denominator keep the O(n^4) loop cheap
    L = 1
    for p in F:
        L = lcm(L, p.x.denominator, p.y.denominator)
    return L, [(int(p.x * L), int(p.y * L)) for p in F]


def _orient(a, b, c):
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def first_derived_set(F) -> frozenset:
    """Single-point crossings of segments with endpoints in ``F``, minus ``F``.

    Only segment pairs with four distinct endpoints that cross properly can
    meet at a point outside ``F``: any other single-point contact happens at
    an endpoint.  Those are the only pairs examined.
    """
    pts = sorted({as_point2(p) for p in F})
    if len(pts) < 4:
        return frozenset()
    L, ip = _scaled(pts)
    segs = list(combinations(range(len(ip)), 2))
    found = set()
    for (i, j), (k, m) in combinations(segs, 2):
        if i == k or i == m or j == k or j == m:
            continue
        a, b, c, d = ip[i], ip[j], ip[k], ip[m]
        if _orient(a, b, c) * _orient(a, b, d) >= 0:
            continue
        if _orient(c, d, a) * _orient(c, d, b) >= 0:
            continue
        rx, ry = b[0] - a[0], b[1] - a[1]
        sx, sy = d[0] - c[0], d[1] - c[1]
        den = rx * sy - ry * sx
        num = (c[0] - a[0]) * sy - (c[1] - a[1]) * sx
        found.add((a[0] * den + num * rx, a[1] * den + num * ry, den))
    fset = set(pts)
    out = set()
    for nx, ny, den in found:
        q = Point2(mpq(nx, den * L), mpq(ny, den * L))
        if q not in fset:
            out.add(q)
    return frozenset(out)


@dataclass(frozen=True)
class Grid:
    """The product ``planar_points x heights``.

    ``shadow`` is ``F`` and ``derived`` is ``F1``; ``planar_points`` is
    their union.
    """

    shadow: frozenset
    derived: frozenset
    heights: tuple
    planar_points: tuple = field(init=False)
    points: frozenset = field(init=False, repr=False)

    def __post_init__(self):
        planar = tuple(sorted(self.shadow | self.derived))
        object.__setattr__(self, "planar_points", planar)
        object.__setattr__(
            self,
            "points",
            frozenset(Point3(q.x, q.y, h) for q in planar for h in self.heights),
        )

    def __len__(self):
        return len(self.points)

    def __contains__(self, p):
        return p in self.points

    def level(self, h) -> tuple:
        return self.planar_points if h in self.heights else ()

    def column(self, q) -> tuple:
        return self.heights if q in self.shadow or q in self.derived else ()


def build_grid(K) -> Grid:
    F, H = project(K)
    return Grid(F, first_derived_set(F), H)
