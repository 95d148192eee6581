import random
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rchull import Point2, Point3, Segment2, build_grid, first_derived_set, project
from rchull.exact import segment_intersection_point


def P(x, y):
    return Point2.of(x, y)


def derived_brute(F):
    """Every pair of segments over F, intersected by Cramer's rule in plain
    Fractions; collinear pairs are resolved by hand."""
    F = [(Fraction(p.x.numerator, p.x.denominator), Fraction(p.y.numerator, p.y.denominator)) for p in F]
    segs = list(combinations(F, 2))
    out = set()
    for (a, b), (c, d) in combinations(segs, 2):
        r = (b[0] - a[0], b[1] - a[1])
        s = (d[0] - c[0], d[1] - c[1])
        den = r[0] * s[1] - r[1] * s[0]
        q = (c[0] - a[0], c[1] - a[1])
        if den == 0:
            if q[0] * r[1] - q[1] * r[0] != 0:
                continue
            # collinear: parametrize along r and look for a single shared point
            rr = r[0] * r[0] + r[1] * r[1]
            t = sorted(((x[0] - a[0]) * r[0] + (x[1] - a[1]) * r[1]) / rr for x in (c, d))
            lo, hi = max(t[0], 0), min(t[1], 1)
            if lo == hi:
                out.add((a[0] + lo * r[0], a[1] + lo * r[1]))
            continue
        t = (q[0] * s[1] - q[1] * s[0]) / den
        u = (q[0] * r[1] - q[1] * r[0]) / den
        if 0 <= t <= 1 and 0 <= u <= 1:
            out.add((a[0] + t * r[0], a[1] + t * r[1]))
    return {P(x, y) for x, y in out} - {P(x, y) for x, y in F}


def derived_via_kernel(F):
    F = list(F)
    segs = [Segment2(a, b) for a, b in combinations(F, 2)]
    out = set()
    for s1, s2 in combinations(segs, 2):
        x = segment_intersection_point(s1, s2)
        if x is not None:
            out.add(x)
    return out - set(F)


SPIRAL_F = {P(1, 0), P(0, 0), P(0, 1), P(1, 1)}


def test_project_spiral(spiral):
    F, H = project(spiral)
    assert F == SPIRAL_F
    assert H == (0, 1, 2)


def test_project_single_and_stacked():
    F, H = project([(3, 4, 5)])
    assert F == {P(3, 4)} and H == (5,)
    F, H = project([(1, 1, 0), (1, 1, 7)])
    assert len(F) == 1 and len(H) == 2


def test_project_empty_rejected():
    with pytest.raises(ValueError):
        project([])


@pytest.mark.parametrize(
    "F, expected",
    [
        (SPIRAL_F, {P("1/2", "1/2")}),
        ({P(0, 0), P(1, 0), P(0, 1)}, set()),
        ({P(0, 0), P(2, 0), P(1, -1), P(1, 1)}, {P(1, 0)}),
    ],
)
def test_first_derived_set_examples(F, expected):
    assert derived_brute(F) == expected
    assert first_derived_set(F) == expected


def test_spiral_grid(spiral):
    g = build_grid(spiral)
    assert len(g.planar_points) == 5 and len(g.heights) == 3 and len(g) == 15
    assert set(spiral) <= g.points


def test_single_point_grid():
    g = build_grid([(1, 2, 3)])
    assert g.points == {Point3.of(1, 2, 3)}


def test_one_height_grid_is_product():
    K = [(0, 0, 5), (4, 0, 5), (0, 4, 5), (4, 4, 5), (1, 3, 5)]
    g = build_grid(K)
    F = {P(x, y) for x, y, _ in K}
    assert g.points == {Point3(q.x, q.y, 5) for q in F | first_derived_set(F)}


def _rand_F(rng, n):
    return {P(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(n)}


def test_first_derived_set_matches_brute_force_enumeration():
    rng = random.Random(11)
    for _ in range(80):
        F = _rand_F(rng, rng.randint(1, 8))
        fast = first_derived_set(F)
        assert fast == derived_brute(F)
        assert fast == derived_via_kernel(F)
        assert len(fast) <= comb(len(F), 4)


def test_first_derived_set_rational_input():
    F = {P("1/3", 0), P("7/5", "2/3"), P(0, "-1/2"), P("3/2", "-5/7"), P(1, 1)}
    assert first_derived_set(F) == derived_brute(F)


affine = st.tuples(*(st.fractions(-3, 3, max_denominator=4) for _ in range(6))).filter(
    lambda t: t[0] * t[3] - t[1] * t[2] != 0
)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), affine)
def test_first_derived_set_affine_equivariant(seed, T):
    a, b, c, d, e, f = T
    move = lambda p: P(a * p.x + b * p.y + e, c * p.x + d * p.y + f)  # noqa: E731
    F = _rand_F(random.Random(seed), 6)
    assert first_derived_set({move(p) for p in F}) == {move(p) for p in first_derived_set(F)}


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(*(st.integers(-3, 3),) * 3), min_size=1, max_size=7), st.randoms())
def test_grid_permutation_and_duplicate_insensitive(K, r):
    shuffled = list(K) + K[:2]
    r.shuffle(shuffled)
    g1, g2 = build_grid(K), build_grid(shuffled)
    assert g1.points == g2.points and g1.planar_points == g2.planar_points
    assert {Point3.of(*k) for k in K} <= g1.points
    F = g1.shadow
    assert len(g1) <= (comb(len(F), 4) + len(F)) * len(g1.heights)
