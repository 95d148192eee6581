"""Write a hull as JSON and as an OBJ mesh for viewing.

The JSON keeps every coordinate as an exact rational string.  The mesh is
rounded to floats and is only meant for a viewer.
"""

import sys
import tempfile
from pathlib import Path

from rchull import complex_extremal_points, rank_one_hull
from rchull.io import ComplexDocument, export_mesh

# two offset triangles stacked with a point on top
K = [(0, 0, 0), (4, 0, 0), (0, 4, 0), (1, 1, 2), (5, 1, 2), (1, 5, 2), (2, 2, 3)]
M, trace = rank_one_hull(K)
doc = ComplexDocument.build(M, trace, complex_extremal_points(M))

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp())
(out / "hull.json").write_text(doc.to_json())
mesh = export_mesh(M)
(out / "hull.obj").write_text(mesh)

kinds = {}
for line in mesh.splitlines():
    if line and not line.startswith("#"):
        kinds[line[0]] = kinds.get(line[0], 0) + 1
print(f"wrote {out / 'hull.json'} and {out / 'hull.obj'}")
print("mesh records:", ", ".join(f"{k}: {v}" for k, v in sorted(kinds.items())))
back = ComplexDocument.from_json((out / "hull.json").read_text())
print("JSON round trip exact:", back.complex == M)
