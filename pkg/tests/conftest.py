import random

import pytest

from rchull import Point3

SPIRAL = [(1, 0, 0), (0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 1, 2), (1, 1, 2)]


def random_instance(rng, nmax=8, lo=-4, hi=4):
    n = rng.randint(1, nmax)
    return [Point3.of(rng.randint(lo, hi), rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(n)]


def random_instances(count, seed, **kw):
    rng = random.Random(seed)
    return [random_instance(rng, **kw) for _ in range(count)]


@pytest.fixture
def spiral():
    return [Point3.of(*p) for p in SPIRAL]


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        number, title = mark.args
        _acceptance.append((number, title, rep.outcome, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome, duration in sorted(_acceptance):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  criterion {number:>2}: {title}  [{duration:.2f}s]")


def contains_brute(pts, p):
    """p in the convex hull of the finite planar set pts, by checking every
    point, segment and triangle spanned by pts."""
    from rchull.exact import orientation

    pts = list(set(pts))
    if p in pts:
        return True
    for i, a in enumerate(pts):
        for j in range(i + 1, len(pts)):
            b = pts[j]
            if orientation(a, b, p) == 0 and min(a, b) <= p <= max(a, b):
                return True
            for c in pts[j + 1:]:
                if orientation(a, b, c) == 0:
                    continue
                o = {orientation(a, b, p), orientation(b, c, p), orientation(c, a, p)}
                if o <= {0, 1} or o <= {0, -1}:
                    return True
    return False


def finitely_extremal_brute(A):
    """Literal reading of the definition on a finite set of Point3."""
    A = set(A)
    out = set()
    for p in A:
        col = [q.z for q in A if q.xy == p.xy]
        if any(lo < p.z < hi for lo in col for hi in col):
            continue
        others = [q.xy for q in A if q.z == p.z and q != p]
        if others and contains_brute(others, p.xy):
            continue
        out.add(p)
    return out


def eliminate_reference(K, strategy="batch"):
    """Textbook loop over whole sets; slow, used as an oracle."""
    from rchull import build_grid

    K = {Point3.of(*k) for k in K}
    A = set(build_grid(K).points)
    batches = []
    while True:
        cands = finitely_extremal_brute(A) - K if len(A) < 60 else None
        if cands is None:
            from rchull.hull import ActiveSet, finitely_extremal

            cands = set(finitely_extremal(ActiveSet(A))) - K
        if not cands:
            return batches, A
        if strategy != "batch":
            cands = {min(cands, key=lambda p: (p.z, p.x, p.y))}
        batches.append(frozenset(cands))
        A -= cands
