"""The 2+1 convex hull of a finite set by finitely-extremal-point elimination.

Start from the whole grid ``A0 = G`` of ``K`` and keep discarding grid points
that are extreme both in their horizontal plane and in their vertical
column, unless they belong to ``K``.  When nothing else can go, the
hv-hull of what is left (planar hulls per height plus vertical extrusions
of consecutive-level overlaps) is the rank-one convex hull of ``K``, and
the surviving points are a scaffolding of order 2.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from typing import Optional

from .exact import (
    ConvexPolygon,
    Point3,
    as_point3,
    convex_hull_2d,
    convex_polygon_intersection,
    cross,
    orientation,
    point_in_polygon,
)
from .grid import Grid, build_grid, normalize_points

STRATEGIES = ("batch", "sequential-lex")


class ActiveSet:
    """A finite subset of the grid, indexed by height and by column.

    Instances are treated as immutable; :meth:`without` returns a new set.
    """

    __slots__ = ("points", "levels", "columns")

    def __init__(self, points):
        self.points = frozenset(as_point3(p) for p in points)
        levels, columns = {}, {}
        for p in self.points:
            levels.setdefault(p.z, set()).add(p.xy)
            insort(columns.setdefault(p.xy, []), p.z)
        self.levels = {h: frozenset(s) for h, s in sorted(levels.items())}
        self.columns = {q: tuple(hs) for q, hs in columns.items()}

    def without(self, removed) -> "ActiveSet":
        return ActiveSet(self.points - frozenset(removed))

    @property
    def heights(self) -> tuple:
        return tuple(self.levels)

    def __len__(self):
        return len(self.points)

    def __contains__(self, p):
        return p in self.points

    def __iter__(self):
        return iter(sorted(self.points))

    def __eq__(self, other):
        return isinstance(other, ActiveSet) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"ActiveSet({len(self.points)} points)"


def _level_candidates(A: ActiveSet, h, hull: Optional[ConvexPolygon] = None):
    hull = hull or convex_hull_2d(A.levels[h])
    out = set()
    for q in hull.vertices:
        col = A.columns[q]
        if h == col[0] or h == col[-1]:
            out.add(Point3(q.x, q.y, h))
    return out


def finitely_extremal(A: ActiveSet) -> frozenset:
    """Points of ``A`` that are a vertex of the planar hull at their height
    and are the top or bottom point of ``A`` in their column."""
    if not isinstance(A, ActiveSet):
        A = ActiveSet(A)
    if not len(A):
        raise ValueError("finitely_extremal of an empty set")
    out = set()
    for h in A.levels:
        out |= _level_candidates(A, h)
    return frozenset(out)


@dataclass(frozen=True)
class EliminationTrace:
    """What the elimination run removed, batch by batch.

    ``batches`` holds ``(step, frozenset_of_removed_points)`` pairs.  With the
    sequential strategy each batch has one point.
    """

    K: frozenset
    grid: Grid
    strategy: str
    batches: tuple
    final: ActiveSet

    @property
    def steps(self) -> int:
        return len(self.batches)

    @property
    def removed(self) -> frozenset:
        out = frozenset()
        for _, pts in self.batches:
            out |= pts
        return out

    def active_sets(self):
        """Yield ``A0, A1, ...`` by replaying the batches from the grid."""
        A = ActiveSet(self.grid.points)
        yield A
        for _, pts in self.batches:
            A = A.without(pts)
            yield A


class _Level:
    """Active points of one horizontal plane with an incrementally kept hull.

    Only hull vertices are ever removed.  Each run of removed vertices cuts
    off a cap between two surviving neighbours; the hull of the active
    points in that cap replaces the run.  A coarse bucket index finds those
    points.  Floats are used to skip points that are clearly outside, with
    a margin well above rounding error; anything close is decided exactly.
    """

    SMALL = 48

    def __init__(self, pts):
        self.active = set(pts)
        self.ring = list(convex_hull_2d(self.active).vertices)
        self.fl = {p: (float(p.x), float(p.y)) for p in self.active}
        fx = [f[0] for f in self.fl.values()]
        fy = [f[1] for f in self.fl.values()]
        self.x0, self.y0 = min(fx), min(fy)
        big = max(max(map(abs, fx)), max(map(abs, fy))) + 1.0
        self.tol = 1e-9 * big * big
        cells = max(1, int(len(self.active) ** 0.5 / 2))
        self.cw = max((max(fx) - self.x0) / cells, 1e-9)
        self.ch = max((max(fy) - self.y0) / cells, 1e-9)
        self.buckets = {}
        for p, (x, y) in self.fl.items():
            self.buckets.setdefault(self._cell(x, y), []).append((x, y, p))

    def _cell(self, x, y):
        return int((x - self.x0) // self.cw), int((y - self.y0) // self.ch)

    def _inside(self, cap):
        """Active points in the closed convex polygon ``cap`` (CCW)."""
        tol = self.tol
        f = [(float(p.x), float(p.y)) for p in cap]
        xmin = min(x for x, _ in f) - tol
        xmax = max(x for x, _ in f) + tol
        ymin = min(y for _, y in f) - tol
        ymax = max(y for _, y in f) + tol
        lo, hi = self._cell(xmin, ymin), self._cell(xmax, ymax)
        n = len(cap)
        edges = [(f[k][0], f[k][1], f[(k + 1) % n][0] - f[k][0], f[(k + 1) % n][1] - f[k][1], k) for k in range(n)]
        found = []
        for i in range(lo[0] - 1, hi[0] + 2):
            for j in range(lo[1] - 1, hi[1] + 2):
                for qx, qy, q in self.buckets.get((i, j), ()):
                    if not (xmin <= qx <= xmax and ymin <= qy <= ymax):
                        continue
                    for ax, ay, dx, dy, k in edges:
                        c = dx * (qy - ay) - dy * (qx - ax)
                        if c > tol:
                            continue
                        if c < -tol or orientation(cap[k], cap[(k + 1) % n], q) < 0:
                            break
                    else:
                        found.append(q)
        return found

    def _bridge(self, a, b, cap):
        """Hull vertices strictly between ``a`` and ``b`` replacing a run."""
        v = convex_hull_2d(self._inside(cap)).vertices
        if len(v) < 3:
            return []
        i = v.index(a)
        out = []
        for k in range(1, len(v)):
            w = v[(i + k) % len(v)]
            if w == b:
                return out
            out.append(w)
        raise AssertionError("cap hull lost a surviving vertex")

    def remove(self, gone):
        self.active -= gone
        for p in gone:
            x, y = self.fl.pop(p)
            self.buckets[self._cell(x, y)].remove((x, y, p))
        ring = self.ring
        kept = [v for v in ring if v not in gone]
        if len(self.active) <= self.SMALL or len(kept) < 3:
            self.ring = list(convex_hull_2d(self.active).vertices)
            return
        n = len(ring)
        start = next(i for i, v in enumerate(ring) if v not in gone)
        out = []
        cap = [ring[start]]
        for step in range(1, n + 1):
            v = ring[(start + step) % n]
            if v in gone:
                cap.append(v)
                continue
            out.append(cap[0])
            if len(cap) > 1:
                out += self._bridge(cap[0], v, cap + [v])
            cap = [v]
        self.ring = out


def eliminate(K, strategy: str = "batch") -> EliminationTrace:
    """Run the elimination algorithm on ``K``.

    ``batch`` removes every finitely extremal point outside ``K`` at once;
    ``sequential-lex`` removes one per step, the smallest in ``(z, x, y)``
    order.
    """
    if strategy == "seq":
        strategy = "sequential-lex"
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    K = normalize_points(K)
    grid = build_grid(K)
    H = grid.heights
    levels = {h: _Level(grid.planar_points) for h in H}
    # columns of the grid stay contiguous runs of H: only their ends go
    span = {q: [0, len(H) - 1] for q in grid.planar_points}

    batches = []
    while True:
        cands = []
        for i, h in enumerate(H):
            for q in levels[h].ring:
                if i in span[q]:
                    p = Point3(q.x, q.y, h)
                    if p not in K:
                        cands.append(p)
        if not cands:
            break
        if strategy == "sequential-lex":
            cands = [min(cands, key=lambda p: (p.z, p.x, p.y))]
        removed = frozenset(cands)
        batches.append((len(batches), removed))
        by_level = {}
        for p in removed:
            by_level.setdefault(p.z, set()).add(p.xy)
            ends = span[p.xy]
            i = H.index(p.z)
            if ends[0] == i:
                ends[0] += 1
            else:
                ends[1] -= 1
        for h, gone in by_level.items():
            levels[h].remove(gone)
    final = ActiveSet(Point3(q.x, q.y, h) for h in H for q in levels[h].active)
    return EliminationTrace(K, grid, strategy, tuple(batches), final)


@dataclass(frozen=True)
class HvComplex:
    """Union of planar hulls per height and vertical prisms between them.

    ``slab_polys[j]`` is the overlap of levels ``j`` and ``j+1`` extruded over
    ``[heights[j], heights[j+1]]``, or None when the two hulls are disjoint.
    Slab vertices need not be grid points.
    """

    heights: tuple
    level_polys: tuple
    slab_polys: tuple

    def level(self, h) -> ConvexPolygon:
        return self.level_polys[self.heights.index(h)]

    def __contains__(self, p):
        return membership(self, p)


def hv_hull(A) -> HvComplex:
    if not isinstance(A, ActiveSet):
        A = ActiveSet(A)
    if not len(A):
        raise ValueError("hv_hull of an empty set")
    heights = A.heights
    levels = tuple(convex_hull_2d(A.levels[h]) for h in heights)
    slabs = tuple(
        convex_polygon_intersection(levels[j], levels[j + 1])
        for j in range(len(levels) - 1)
    )
    return HvComplex(heights, levels, slabs)


def _locate(heights, z):
    """Return ``(j, exact)``: ``exact`` if ``z == heights[j]``, otherwise
    ``heights[j] < z < heights[j+1]``; None outside the range."""
    lo, hi = 0, len(heights) - 1
    if z < heights[lo] or z > heights[hi]:
        return None
    while lo <= hi:
        mid = (lo + hi) // 2
        if heights[mid] == z:
            return mid, True
        if heights[mid] < z:
            lo = mid + 1
        else:
            hi = mid - 1
    return hi, False


def membership(M: HvComplex, p) -> bool:
    p = as_point3(p)
    loc = _locate(M.heights, p.z)
    if loc is None:
        return False
    j, exact = loc
    poly = M.level_polys[j] if exact else M.slab_polys[j]
    return poly is not None and point_in_polygon(poly, p.xy)


def complex_extremal_points(M: HvComplex, A=None) -> frozenset:
    """Points of ``M`` through which no open horizontal or vertical segment
    of ``M`` passes.

    These are level-polygon vertices that are not covered by the slabs on
    both sides.  If ``A`` is given it must be the set ``M`` was built from.
    """
    if A is not None and hv_hull(A) != M:
        raise ValueError("complex does not match the given active set")
    out = set()
    last = len(M.heights) - 1
    for j, (h, poly) in enumerate(zip(M.heights, M.level_polys)):
        below = M.slab_polys[j - 1] if j > 0 else None
        above = M.slab_polys[j] if j < last else None
        for q in poly.vertices:
            if below is not None and above is not None:
                if point_in_polygon(below, q) and point_in_polygon(above, q):
                    continue
            out.add(Point3(q.x, q.y, h))
    return frozenset(out)


def scaffolding(K) -> frozenset:
    """The points surviving batch elimination: a finite superset of ``K``
    whose hv-hull is the rank-one convex hull of ``K``."""
    return eliminate(K, "batch").final.points


def rank_one_hull(K, strategy: str = "batch"):
    """Convenience wrapper returning ``(complex, trace)``."""
    trace = eliminate(K, strategy)
    return hv_hull(trace.final), trace
