"""Walk through the elimination run on the spiral staircase.

Six points in three horizontal planes; consecutive points are joined by a
horizontal or vertical segment.  The grid has 15 points and the algorithm
peels it back to the six input points in three batches.
"""

from rchull import build_grid, complex_extremal_points, eliminate, hv_hull

S = [(1, 0, 0), (0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 1, 2), (1, 1, 2)]


def show(p):
    return "(" + ", ".join(str(c) for c in p) + ")"


grid = build_grid(S)
print(f"shadow F has {len(grid.shadow)} points, derived set F1 = {sorted(map(show, grid.derived))}")
print(f"grid: {len(grid.planar_points)} planar points x {len(grid.heights)} heights = {len(grid)} points")

trace = eliminate(S, "batch")
for step, pts in trace.batches:
    print(f"step {step}: remove {', '.join(show(p) for p in sorted(pts))}")
print(f"left with {len(trace.final)} points")

M = hv_hull(trace.final)
for h, poly in zip(M.heights, M.level_polys):
    print(f"level z={h}: {' - '.join(show(v) for v in poly.vertices)}")
for j, poly in enumerate(M.slab_polys):
    lo, hi = M.heights[j], M.heights[j + 1]
    body = "empty" if poly is None else " - ".join(show(v) for v in poly.vertices)
    print(f"slab {lo} < z < {hi}: {body}")
print("extremal points:", ", ".join(show(p) for p in sorted(complex_extremal_points(M))))

seq = eliminate(S, "sequential-lex")
print(f"one point at a time the same set is reached in {seq.steps} steps:", seq.final == trace.final)
