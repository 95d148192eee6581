"""``hull`` command line tool.

Exit status: 0 on success (or "is a member"), 1 for "not a member" or a
failed verification, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .exact import Point3
from .grid import build_grid
from .hull import complex_extremal_points, eliminate, hv_hull, membership
from .io import (
    ComplexDocument,
    InputDocument,
    InputError,
    export_mesh,
    format_rational,
    parse_input,
    parse_rational,
    trace_to_json,
)
from .pcpp import pcpp_member
from .verify import verify_hull


class UsageError(Exception):
    pass


def _load(path) -> InputDocument:
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return parse_input(data)


def _point(args) -> Point3:
    try:
        return Point3(*(parse_rational(c) for c in args.point))
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"--point: {e}") from None


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_compute(args):
    doc = _load(args.input)
    trace = eliminate(doc.points, args.strategy)
    M = hv_hull(trace.final)
    out = ComplexDocument.build(M, trace, complex_extremal_points(M, trace.final))
    _write(args.out, out.to_json())
    if args.mesh:
        Path(args.mesh).write_text(export_mesh(M))
    if args.trace:
        Path(args.trace).write_text(trace_to_json(trace))
    if args.report:
        report = verify_hull(doc.points, trace, M, samples=args.samples, seed=args.seed)
        for line in report.lines():
            print(line, file=sys.stderr)
        return 0 if report.overall else 1
    return 0


def cmd_member(args):
    doc = _load(args.input)
    p = _point(args)
    M = hv_hull(eliminate(doc.points).final)
    inside = membership(M, p)
    print(f"member: {str(inside).lower()}")
    return 0 if inside else 1


def cmd_pcpp(args):
    doc = _load(args.input)
    inside, shovel = pcpp_member(doc.points, _point(args))
    print(f"member: {str(inside).lower()}")
    if shovel is not None:
        f = format_rational
        print(
            f"witness: l(x, y) = a*x + b*y + c with a={f(shovel.a)}, b={f(shovel.b)}, "
            f"c={f(shovel.c)}; z0={f(shovel.z0)}; eps={shovel.eps:+d}"
        )
    return 0 if inside else 1


def cmd_grid(args):
    g = build_grid(_load(args.input).points)
    print(f"|F|={len(g.shadow)}")
    print(f"|F1|={len(g.derived)}")
    print(f"|H|={len(g.heights)}")
    print(f"|G|={len(g)}")
    return 0


def cmd_verify(args):
    doc = _load(args.input)
    trace = eliminate(doc.points, args.strategy)
    M = hv_hull(trace.final)
    report = verify_hull(doc.points, trace, M, samples=args.samples, seed=args.seed)
    for line in report.lines():
        print(line)
    return 0 if report.overall else 1


def cmd_scaffold(args):
    doc = _load(args.input)
    pts = sorted(eliminate(doc.points).final.points)
    _write(args.out, InputDocument(pts, name=doc.name).to_json())
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hull", description="Exact 2+1 (rank-one) convex hulls of finite sets in R^3."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("input", help="point file (JSON), or - for stdin")
        p.set_defaults(func=func)
        return p

    def strategy(p):
        p.add_argument(
            "--strategy",
            choices=["batch", "seq", "sequential-lex"],
            default="batch",
            help="remove all candidates per step (batch) or one at a time",
        )

    def sampling(p):
        p.add_argument("--samples", type=int, default=50)
        p.add_argument("--seed", type=int, default=0)

    p = add("compute", cmd_compute, "compute the hull and write it as JSON")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--mesh", help="also write a lossy OBJ mesh")
    p.add_argument("--trace", help="also write the elimination trace")
    p.add_argument("--report", action="store_true", help="run the verification checks")
    strategy(p)
    sampling(p)

    for name, func, what in [
        ("member", cmd_member, "is a point in the rank-one convex hull?"),
        ("pcpp", cmd_pcpp, "is a point in the pc++ outer approximation?"),
    ]:
        p = add(name, func, what)
        p.add_argument("--point", nargs=3, required=True, metavar=("X", "Y", "Z"))

    add("grid", cmd_grid, "print the sizes of the grid")

    p = add("verify", cmd_verify, "run the verification checks")
    strategy(p)
    sampling(p)

    p = add("scaffold", cmd_scaffold, "write the order-2 scaffolding as a point file")
    p.add_argument("--out", help="output file (default: stdout)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, UsageError) as e:
        print(f"hull: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
