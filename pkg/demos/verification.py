"""Run the cross-checks on a few inputs, then on a deliberately broken trace."""

import random

from rchull import rank_one_hull, verify_hull
from rchull.verify import corrupt_trace

rng = random.Random(5)
cases = {
    "spiral": [(1, 0, 0), (0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 1, 2), (1, 1, 2)],
    "two stacked points": [(0, 0, 0), (0, 0, 1)],
    "random": [(rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-2, 2)) for _ in range(7)],
}
for name, K in cases.items():
    M, trace = rank_one_hull(K)
    print(f"== {name}")
    for line in verify_hull(K, trace, M).lines():
        print("  " + line)

K = cases["spiral"]
M, trace = rank_one_hull(K)
bad = corrupt_trace(trace, (0, 0, 1))
print("== spiral, trace that also removes an input point")
for line in verify_hull(K, bad, M).lines():
    print("  " + line)
