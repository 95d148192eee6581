"""Cross-checks between the computed hull and independent approximations.

``verify_hull`` runs six checks on one elimination run:

1. extremal points of the complex lie in K;
2. finitely extremal points of the final active set lie in K;
3. inner: sampled points of horizontal and vertical segments between
   K-points belong to the complex;
4. outer: sampled points of the complex pass the pc++ test;
5. the trace is monotone, never touches K, and is not longer than the grid;
6. every removed point is a vertex of its level hull before the step and
   lies outside it afterwards.

Samples are rational, so nothing here rounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import ceil, floor

from gmpy2 import mpq

from .exact import ConvexPolygon, Point3, convex_hull_2d, point_in_polygon
from .grid import normalize_points
from .hull import (
    ActiveSet,
    EliminationTrace,
    HvComplex,
    complex_extremal_points,
    finitely_extremal,
    membership,
)
from .pcpp import pcpp_member


@dataclass
class Check:
    name: str
    passed: bool
    details: object = None


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, details=None):
        self.checks.append(Check(name, bool(passed), details))

    def __getitem__(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def lines(self):
        for c in self.checks:
            tail = "" if c.passed or c.details is None else f"  ({c.details})"
            yield f"{'PASS' if c.passed else 'FAIL'} {c.name}{tail}"


def _lerp(a, b, t):
    return Point3(*(x + t * (y - x) for x, y in zip(a, b)))


def rank_one_segments(K):
    """Pairs of K-points at equal height or on a common vertical line."""
    pts = sorted(normalize_points(K))
    return [(a, b) for a, b in combinations(pts, 2) if a.z == b.z or a.xy == b.xy]


def sample_segments(segments, n, rng):
    """``n`` points at parameters ``k/(n+1)`` on randomly chosen segments."""
    if not segments:
        return []
    out = []
    for _ in range(n):
        a, b = rng.choice(segments)
        out.append(_lerp(a, b, mpq(rng.randint(1, n), n + 1)))
    return out


def _combination(poly: ConvexPolygon, rng):
    w = [rng.randint(0, 6) for _ in poly.vertices]
    if not any(w):
        w[0] = 1
    total = sum(w)
    x = sum(wi * v.x for wi, v in zip(w, poly.vertices)) / total
    y = sum(wi * v.y for wi, v in zip(w, poly.vertices)) / total
    return x, y


def sample_complex(M: HvComplex, n, rng):
    """Random rational points of the set represented by ``M``."""
    pieces = [("level", j) for j in range(len(M.heights))]
    pieces += [("slab", j) for j, s in enumerate(M.slab_polys) if s is not None]
    out = []
    for _ in range(n):
        kind, j = rng.choice(pieces)
        if kind == "level":
            x, y = _combination(M.level_polys[j], rng)
            z = M.heights[j]
        else:
            x, y = _combination(M.slab_polys[j], rng)
            lo, hi = M.heights[j], M.heights[j + 1]
            z = lo + mpq(rng.randint(1, 9), 10) * (hi - lo)
        out.append(Point3(mpq(x), mpq(y), mpq(z)))
    return out


def sample_probes(K, n, rng, M: HvComplex = None):
    """A mix of hull points and points of an enlarged bounding box, at grid
    heights and in between; useful to compare two membership oracles."""
    K = normalize_points(K)
    xs, ys, zs = zip(*K)
    heights = sorted(set(zs))
    out = []
    for i in range(n):
        if M is not None and i % 3 == 0:
            out.extend(sample_complex(M, 1, rng))
            continue
        x = mpq(rng.randint(int(floor(4 * min(xs))) - 4, int(ceil(4 * max(xs))) + 4), 4)
        y = mpq(rng.randint(int(floor(4 * min(ys))) - 4, int(ceil(4 * max(ys))) + 4), 4)
        if i % 3 == 1 or len(heights) == 1:
            z = rng.choice(heights)
        else:
            j = rng.randrange(len(heights) - 1)
            z = heights[j] + mpq(rng.randint(1, 3), 4) * (heights[j + 1] - heights[j])
        out.append(Point3(x, y, mpq(z)))
    return out


def brute_force_hull_1level(K) -> ConvexPolygon:
    """Planar convex hull of single-height input: the whole answer there."""
    K = normalize_points(K)
    if len({p.z for p in K}) != 1:
        raise ValueError("points are not all at the same height")
    return convex_hull_2d(p.xy for p in K)


def _check_trace(K, trace):
    grid = trace.grid.points
    seen = set()
    for step, pts in trace.batches:
        if not pts:
            return False, f"step {step} removes nothing"
        if pts & K:
            return False, min(pts & K)
        if pts & seen:
            return False, f"step {step} removes {min(pts & seen)} twice"
        if not pts <= grid:
            return False, f"step {step} removes {min(pts - grid)}, not a grid point"
        seen |= pts
    if seen != grid - trace.final.points:
        return False, "removed points and final set do not partition the grid"
    if sum(len(pts) for _, pts in trace.batches) > len(grid):
        return False, "more removals than grid points"
    return True, f"{trace.steps} steps, {len(seen)} removed, |G| = {len(grid)}"


def separating_certificates(trace: EliminationTrace):
    """Yield ``(step, point, ok)`` for every removed point: ``ok`` when the
    point is a vertex of its level hull before the step and falls outside it
    after."""
    sets = trace.active_sets()
    before = next(sets)
    for (step, pts), after in zip(trace.batches, sets):
        for p in sorted(pts):
            if p not in before:
                yield step, p, False
                continue
            was = convex_hull_2d(before.levels[p.z])
            now = after.levels.get(p.z)
            ok = p.xy in was.vertices and (
                now is None or not point_in_polygon(convex_hull_2d(now), p.xy)
            )
            yield step, p, ok
        before = after


def verify_hull(K, trace: EliminationTrace, M: HvComplex, samples=50, seed=0):
    K = normalize_points(K)
    if trace.K != K:
        raise ValueError("trace was not produced from this input")
    rng = random.Random(seed)
    report = VerificationReport()

    extr = complex_extremal_points(M)
    bad = sorted(extr - K)
    report.add("extremal points of complex in K", not bad, bad[0] if bad else len(extr))

    fin = finitely_extremal(trace.final)
    bad = sorted(fin - K)
    report.add("finitely extremal points in K", not bad, bad[0] if bad else len(fin))

    segs = rank_one_segments(K)
    inner = sorted(K) + sample_segments(segs, samples, rng)
    bad = [p for p in inner if not membership(M, p)]
    report.add("inner: rank-one segments of K in complex", not bad, bad[0] if bad else len(inner))

    outer = sample_complex(M, samples, rng)
    bad = [p for p in outer if not pcpp_member(K, p)[0]]
    report.add("outer: complex inside pc++ hull", not bad, bad[0] if bad else len(outer))

    ok, details = _check_trace(K, trace)
    report.add("trace monotone and bounded", ok, details)

    bad = [(s, p) for s, p, ok in separating_certificates(trace) if not ok]
    report.add(
        "separating line for every removal",
        not bad,
        f"step {bad[0][0]}: {bad[0][1]}" if bad else None,
    )
    return report


def corrupt_trace(trace: EliminationTrace, point) -> EliminationTrace:
    """A copy of ``trace`` whose last batch also removes ``point``; for
    exercising the failure path of the trace check."""
    point = Point3(*point)
    batches = list(trace.batches)
    if batches:
        step, pts = batches[-1]
        batches[-1] = (step, pts | {point})
    else:
        batches.append((0, frozenset([point])))
    final = ActiveSet(trace.final.points - {point})
    return EliminationTrace(trace.K, trace.grid, trace.strategy, tuple(batches), final)
