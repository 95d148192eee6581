"""How large the grid gets for random inputs, next to the C(|F|, 4) bound."""

import random
from math import comb

from rchull import build_grid, eliminate

rng = random.Random(1)
print(" |K|  |F|  |F1|  C(|F|,4)  |H|   |G|  removed  left")
for n in range(2, 11):
    K = [(rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(n)]
    g = build_grid(K)
    trace = eliminate(K)
    print(
        f"{n:4d} {len(g.shadow):4d} {len(g.derived):5d} {comb(len(g.shadow), 4):9d}"
        f" {len(g.heights):4d} {len(g):5d} {len(trace.removed):8d} {len(trace.final):5d}"
    )
