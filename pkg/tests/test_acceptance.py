"""One test per acceptance criterion; a summary with one PASS/FAIL line per
criterion is printed at the end of the pytest run."""

import random
import time
from fractions import Fraction
from math import comb

import pytest
from conftest import SPIRAL, contains_brute, random_instances

from rchull import (
    ConvexPolygon,
    Point2,
    Point3,
    build_grid,
    complex_extremal_points,
    eliminate,
    finitely_extremal,
    hv_hull,
    membership,
    pcpp_member,
    rank_one_hull,
    scaffolding,
)
from rchull.verify import rank_one_segments, sample_complex, sample_probes, sample_segments, separating_certificates

acceptance = pytest.mark.acceptance
P2, P3 = Point2.of, Point3.of

# |K| <= 8, integer coordinates in [-4, 4]
INSTANCES = random_instances(200, seed=2024)


@pytest.fixture(scope="module")
def runs():
    out = []
    for K in INSTANCES:
        batch = eliminate(K, "batch")
        seq = eliminate(K, "sequential-lex")
        out.append((K, batch, seq, hv_hull(batch.final)))
    return out


@acceptance(1, "Spiral Staircase exactness")
def test_spiral_exact():
    t = time.perf_counter()
    S = [P3(*p) for p in SPIRAL]
    M, trace = rank_one_hull(S)
    extremal = complex_extremal_points(M)
    scaffold = scaffolding(S)
    elapsed = time.perf_counter() - t

    assert M.heights == (0, 1, 2)
    assert M.level_polys == (
        ConvexPolygon((P2(0, 0), P2(1, 0))),
        ConvexPolygon((P2(0, 0), P2(0, 1))),
        ConvexPolygon((P2(0, 1), P2(1, 1))),
    )
    assert M.slab_polys == (ConvexPolygon((P2(0, 0),)), ConvexPolygon((P2(0, 1),)))
    assert extremal == set(S)
    assert scaffold == set(S)
    assert [len(pts) for _, pts in trace.batches] == [4, 4, 1]
    assert elapsed < 1.0


@acceptance(2, "pc++ strict gap")
def test_pcpp_gap():
    t = time.perf_counter()
    S = [P3(*p) for p in SPIRAL]
    M, _ = rank_one_hull(S)
    Q = P3(Fraction(1, 2), Fraction(1, 2), 1)
    assert pcpp_member(S, Q) == (True, None)
    assert membership(M, Q) is False
    assert time.perf_counter() - t < 1.0


@acceptance(3, "grid size bound")
def test_grid_bound():
    t = time.perf_counter()
    for K in random_instances(100, seed=3):
        g = build_grid(K)
        nF = len(g.shadow)
        assert len(g.derived) <= comb(nF, 4)
        assert len(g) <= (comb(nF, 4) + nF) * len(g.heights)
    assert time.perf_counter() - t < 30.0


@acceptance(4, "termination bound")
def test_termination(runs):
    for K, batch, seq, _ in runs:
        assert all(len(pts) == 1 for _, pts in seq.batches)
        assert seq.steps <= len(seq.grid)
        assert sum(len(pts) for _, pts in batch.batches) <= len(batch.grid)


@acceptance(5, "stopping and extremality invariants")
def test_extremal_in_K(runs):
    for K, batch, seq, M in runs:
        Kset = set(K)
        assert finitely_extremal(batch.final) <= Kset
        assert finitely_extremal(seq.final) <= Kset
        assert complex_extremal_points(M, batch.final) <= Kset


@acceptance(6, "inclusion-chain sampling")
def test_inclusion_chain(runs):
    rng = random.Random(6)
    for K, batch, _, M in runs:
        segs = rank_one_segments(K)
        inner = sample_segments(segs, 50, rng) if segs else list(set(K))
        assert all(membership(M, p) for p in inner)
        assert all(pcpp_member(K, p)[0] for p in sample_complex(M, 50, rng))


@acceptance(7, "separating-line certificates")
def test_certificates(runs):
    count = 0
    for _, batch, seq, _ in runs:
        for trace in (batch, seq):
            for step, p, ok in separating_certificates(trace):
                assert ok, (step, p)
                count += 1
    assert count > 0


def _random_map(rng):
    while True:
        a, b, c, d = (Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(4))
        if a * d - b * c:
            break
    e, f, t = (Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(3))
    s = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
    return lambda p: P3(a * p.x + b * p.y + e, c * p.x + d * p.y + f, s * p.z + t)


@acceptance(8, "equivariance under admissible maps")
def test_equivariance():
    rng = random.Random(8)
    for K in random_instances(20, seed=8):
        final = eliminate(K).final.points
        for _ in range(3):
            T = _random_map(rng)
            assert eliminate([T(k) for k in K]).final.points == {T(p) for p in final}


@acceptance(9, "single-height oracle")
def test_single_height():
    rng = random.Random(9)
    for K in random_instances(50, seed=9):
        h = K[0].z
        K = [P3(k.x, k.y, h) for k in K]
        M, _ = rank_one_hull(K)
        plane = [k.xy for k in K]
        for p in sample_probes(K, 100, rng, M):
            assert membership(M, p) == (p.z == h and contains_brute(plane, p.xy))


@acceptance(10, "scaffolding soundness")
def test_scaffolding_rerun():
    # |K| <= 6 here: scaffoldings of larger sets can have grids of 10^5 points
    rng = random.Random(10)
    for K in random_instances(100, seed=10, nmax=6):
        M, trace = rank_one_hull(K)
        scaffold = trace.final.points
        assert len(scaffold) <= len(trace.grid)
        M2, _ = rank_one_hull(scaffold)
        for p in sample_probes(K, 100, rng, M):
            assert membership(M, p) == membership(M2, p)
