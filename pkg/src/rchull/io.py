"""Reading point sets and writing hulls.

The exact interchange format is JSON with every number written as a
rational string (``"3"``, ``"-1/2"``).  Point files look like::

    {"name": "spiral", "points": [["1", "0", "0"], ["0", "0", "0"]]}

A bare list of triples is accepted too, as are integer and finite decimal
literals (``"0.25"`` reads as 1/4).  OBJ export is lossy and exists for
looking at results only.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from decimal import Decimal
from typing import Optional

from gmpy2 import mpq

from .exact import ConvexPolygon, Point2, Point3, rational
from .hull import EliminationTrace, HvComplex

_LITERAL = re.compile(r"[+-]?(\d+/\d+|\d+(\.\d*)?([eE][+-]?\d+)?|\.\d+([eE][+-]?\d+)?)")


class InputError(ValueError):
    """Malformed input; ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message, line=None, column=None):
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


def _position(text, offset):
    line = text.count("\n", 0, offset) + 1
    return line, offset - (text.rfind("\n", 0, offset) + 1) + 1


def parse_rational(lit) -> mpq:
    """Exact value of a numeric literal: ``p/q``, an integer or a decimal."""
    if isinstance(lit, bool):
        raise ValueError("booleans are not numbers")
    if isinstance(lit, int):
        return mpq(lit)
    if isinstance(lit, Decimal):
        lit = str(lit)
    if not isinstance(lit, str):
        raise ValueError(f"expected a rational literal, got {type(lit).__name__}")
    s = lit.strip()
    if not _LITERAL.fullmatch(s):
        raise ValueError(f"not a finite rational literal: {lit!r}")
    if "/" in s and int(s.split("/")[1]) == 0:
        raise ValueError(f"zero denominator in {lit!r}")
    return rational(s)


def format_rational(q) -> str:
    return str(rational(q))


@dataclass
class InputDocument:
    points: list
    name: Optional[str] = None
    labels: Optional[list] = None

    def to_json(self) -> str:
        doc = {"points": [[format_rational(c) for c in p] for p in self.points]}
        if self.name is not None:
            doc["name"] = self.name
        if self.labels is not None:
            doc["labels"] = list(self.labels)
        return _dumps(doc)


def parse_input(data) -> InputDocument:
    if isinstance(data, (bytes, bytearray)):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise InputError(f"input is not UTF-8 ({e.reason})") from None
    else:
        text = data
    try:
        raw = json.loads(text, parse_float=Decimal, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise InputError(e.msg, e.lineno, e.colno) from None
    except ValueError as e:
        raise InputError(str(e)) from None

    name = labels = None
    if isinstance(raw, dict):
        if "points" not in raw:
            raise InputError('missing "points" key', 1, 1)
        name, labels = raw.get("name"), raw.get("labels")
        raw = raw["points"]
    if not isinstance(raw, list) or not raw:
        raise InputError("expected a non-empty list of points", 1, 1)
    if labels is not None and (not isinstance(labels, list) or len(labels) != len(raw)):
        raise InputError("labels must be a list with one entry per point")

    points, cursor = [], 0
    for i, item in enumerate(raw):
        if not isinstance(item, list) or len(item) != 3:
            raise InputError(f"point {i} is not a list of three coordinates")
        coords = []
        for lit in item:
            token = json.dumps(lit) if isinstance(lit, str) else str(lit)
            off = text.find(token, cursor)
            if off >= 0:
                cursor = off + len(token)
            try:
                coords.append(parse_rational(lit))
            except (ValueError, ZeroDivisionError) as e:
                line, col = _position(text, off) if off >= 0 else (None, None)
                raise InputError(f"point {i}: {e}", line, col) from None
        points.append(Point3(*coords))
    return InputDocument(points, name, labels)


def _reject_constant(name):
    raise ValueError(f"non-finite literal {name} is not allowed")


def _dumps(doc) -> str:
    # one coordinate tuple per line keeps diffs readable
    text = json.dumps(doc, sort_keys=True, indent=1)
    flat = re.sub(
        r"\[\s+((?:\"[^\"]*\",\s+)*\"[^\"]*\")\s+\]",
        lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]",
        text,
    )
    return flat + "\n"


def _poly_json(poly: ConvexPolygon):
    return [[format_rational(v.x), format_rational(v.y)] for v in poly.vertices]


def _point_json(p):
    return [format_rational(c) for c in p]


def _poly_from_json(rows) -> ConvexPolygon:
    return ConvexPolygon(tuple(Point2(parse_rational(x), parse_rational(y)) for x, y in rows))


@dataclass
class ComplexDocument:
    """Serializable bundle: the hv-complex, its extremal points, the
    scaffolding and a summary of the elimination run."""

    complex: HvComplex
    extremal_points: list = field(default_factory=list)
    scaffolding: list = field(default_factory=list)
    trace: dict = field(default_factory=dict)

    @classmethod
    def build(cls, M: HvComplex, trace: EliminationTrace, extremal) -> "ComplexDocument":
        summary = {
            "strategy": trace.strategy,
            "steps": trace.steps,
            "removed_counts": [len(pts) for _, pts in trace.batches],
            "removed_total": len(trace.removed),
            "grid_size": len(trace.grid),
        }
        return cls(M, sorted(extremal), sorted(trace.final.points), summary)

    def to_dict(self) -> dict:
        M = self.complex
        return {
            "heights": [format_rational(h) for h in M.heights],
            "levels": [
                {"height": format_rational(h), "rank": poly.rank, "vertices": _poly_json(poly)}
                for h, poly in zip(M.heights, M.level_polys)
            ],
            "slabs": [
                {
                    "lower": format_rational(M.heights[j]),
                    "upper": format_rational(M.heights[j + 1]),
                    "rank": None if poly is None else poly.rank,
                    "vertices": None if poly is None else _poly_json(poly),
                }
                for j, poly in enumerate(M.slab_polys)
            ],
            "extremal_points": [_point_json(p) for p in sorted(self.extremal_points)],
            "scaffolding": [_point_json(p) for p in sorted(self.scaffolding)],
            "trace": self.trace,
        }

    def to_json(self) -> str:
        return _dumps(self.to_dict())

    @classmethod
    def from_json(cls, text) -> "ComplexDocument":
        d = json.loads(text)
        heights = tuple(parse_rational(h) for h in d["heights"])
        levels = tuple(_poly_from_json(lv["vertices"]) for lv in d["levels"])
        slabs = tuple(
            None if s["vertices"] is None else _poly_from_json(s["vertices"]) for s in d["slabs"]
        )
        pts = lambda rows: [Point3(*(parse_rational(c) for c in r)) for r in rows]  # noqa: E731
        return cls(
            HvComplex(heights, levels, slabs),
            pts(d["extremal_points"]),
            pts(d["scaffolding"]),
            d.get("trace", {}),
        )


def trace_to_json(trace: EliminationTrace) -> str:
    doc = {
        "strategy": trace.strategy,
        "input": [_point_json(p) for p in sorted(trace.K)],
        "grid_size": len(trace.grid),
        "batches": [
            {"step": step, "removed": [_point_json(p) for p in sorted(pts)]}
            for step, pts in trace.batches
        ],
        "final": [_point_json(p) for p in sorted(trace.final.points)],
    }
    return _dumps(doc)


def _fmt(q) -> str:
    # shortest decimal that round-trips through a 64-bit float
    return repr(float(q))


def export_mesh(M: HvComplex) -> str:
    """Wavefront OBJ text for ``M``.

    Full-dimensional level polygons are fan-triangulated; slabs become
    vertical walls (two triangles per edge) plus caps.  Point and segment
    pieces are written as ``p`` and ``l`` records after the faces.
    Coordinates are rounded to floats, so the output is for display only.
    """
    verts, index = [], {}
    faces, lines, points = [], [], []
    seen_faces, seen_lines = set(), set()

    def vid(q, z):
        key = (q.x, q.y, z)
        if key not in index:
            index[key] = len(verts) + 1
            verts.append(key)
        return index[key]

    def face(*ids):
        if frozenset(ids) not in seen_faces:
            seen_faces.add(frozenset(ids))
            faces.append(ids)

    def line(a, b):
        if frozenset((a, b)) not in seen_lines:
            seen_lines.add(frozenset((a, b)))
            lines.append((a, b))

    def fan(poly, z):
        v = [vid(q, z) for q in poly.vertices]
        for i in range(1, len(v) - 1):
            face(v[0], v[i], v[i + 1])

    for h, poly in zip(M.heights, M.level_polys):
        if poly.rank == 2:
            fan(poly, h)
        elif poly.rank == 1:
            line(vid(poly.vertices[0], h), vid(poly.vertices[1], h))
        else:
            points.append(vid(poly.vertices[0], h))

    for j, poly in enumerate(M.slab_polys):
        if poly is None:
            continue
        lo, hi = M.heights[j], M.heights[j + 1]
        if poly.rank == 0:
            q = poly.vertices[0]
            line(vid(q, lo), vid(q, hi))
            continue
        for e in poly.edges():
            a0, b0, a1, b1 = vid(e.a, lo), vid(e.b, lo), vid(e.a, hi), vid(e.b, hi)
            face(a0, b0, b1)
            face(a0, b1, a1)
        if poly.rank == 2:
            fan(poly, lo)
            fan(poly, hi)

    # a point record is redundant once the vertex is used by anything else
    used = {i for f in faces for i in f} | {i for ln in lines for i in ln}
    points = [i for i in points if i not in used]

    out = ["# rchull hv-complex export", "# LOSSY: coordinates rounded to binary64, for visualization only"]
    out += [f"v {_fmt(x)} {_fmt(y)} {_fmt(z)}" for x, y, z in verts]
    out += ["f " + " ".join(map(str, f)) for f in faces]
    out += ["# degenerate elements"]
    out += [f"l {a} {b}" for a, b in lines]
    out += [f"p {i}" for i in points]
    return "\n".join(out) + "\n"
