"""Command-line interface.

Exit codes: 0 success or isomorphic, 1 not isomorphic or a failed check,
2 usage or parse error, 3 precondition failure, 4 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import canon, grid
from .errors import (
    ConstructionError,
    GraphDomainError,
    InvariantError,
    ParseError,
    PreconditionError,
    SizeGuardError,
)
from .fileformat import parse_document, parse_grid_file, serialize_graph, to_dot
from .gadgets import FAMILIES, OrdInstance, brute_force_iso, build_pair
from .graph import Graph, OrientedGraph, sort_vertices

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_INVARIANT = 4


class UsageError(Exception):
    pass


def format_code(code) -> str:
    return " ".join(f"({a},{b})" for a, b in code)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str):
    try:
        return parse_document(_read(path)).graph
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _require_oriented(g, path: str) -> OrientedGraph:
    if not isinstance(g, OrientedGraph):
        raise PreconditionError(f"{path} has no rotation block")
    return g


def _point(text: str) -> tuple:
    try:
        r, c = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected r,c but got {text!r}") from None
    return (r, c)


def _base(g) -> Graph:
    return g.graph if isinstance(g, OrientedGraph) else g


def cmd_canon(args, out) -> int:
    g = _load_graph(args.file)
    if args.oriented:
        og = _require_oriented(g, args.file)
        for code in canon.oriented_canonical_form(og):
            print(format_code(code), file=out)
        return EXIT_OK
    print(format_code(canon.canonical_form_planar3(g, trust_input=args.trust_input)), file=out)
    return EXIT_OK


def _print_mapping(mapping, out):
    for v in sort_vertices(mapping):
        print(f"φ {v} -> {mapping[v]}", file=out)


def cmd_iso(args, out) -> int:
    g = _load_graph(args.a)
    h = _load_graph(args.b)
    if args.allow_reflection and not args.oriented:
        raise UsageError("--allow-reflection only applies with --oriented")
    if args.oriented:
        phi = canon.is_isomorphic_oriented(
            _require_oriented(g, args.a),
            _require_oriented(h, args.b),
            allow_reflection=args.allow_reflection,
        )
        mapping = None if phi is None else dict(phi.items())
    else:
        try:
            phi = canon.is_isomorphic_planar3(g, h)
            mapping = None if phi is None else dict(phi.items())
        except PreconditionError:
            # outside the planar 3-connected class: exact backtracking instead
            mapping = brute_force_iso(_base(g), _base(h))
    if mapping is None:
        print("not isomorphic", file=out)
        return EXIT_NEGATIVE
    print("isomorphic", file=out)
    _print_mapping(mapping, out)
    return EXIT_OK


def cmd_gen(args, out) -> int:
    try:
        inst = OrdInstance(args.n, args.i, args.j)
    except GraphDomainError as exc:
        raise UsageError(str(exc)) from None
    pair = build_pair(args.target, inst)
    prefix = args.out_prefix
    for k, g in ((1, pair.first), (2, pair.second)):
        name = f"{Path(prefix).name or 'g'}{k}"
        Path(f"{prefix}{k}.graph").write_text(serialize_graph(g, name), encoding="utf-8")
    manifest = pair.manifest()
    Path(f"{prefix}.manifest").write_text(manifest + "\n", encoding="utf-8")
    print(manifest, file=out)
    return EXIT_OK


def _grid_weight(name: str):
    if name == "unit":
        return lambda e, n: 1
    return name


def cmd_grid_verify(args, out) -> int:
    if args.seed is None:
        gg = grid.full_grid(args.rows, args.cols)
    else:
        gg = grid.random_subgrid(args.rows, args.cols, args.seed, density=args.density)
    report = grid.verify_unique_min_weight(gg, weight=_grid_weight(args.weight))
    print(f"pairs {report.pairs_checked} paths {report.paths_checked}", file=out)
    if report.ok:
        print("unique", file=out)
        return EXIT_OK
    cert = report.certificate
    print(f"violated {cert.kind} {cert.source} -> {cert.target}", file=out)
    for p, total in zip(cert.paths, cert.totals):
        print(f"  total {total} path {' '.join(f'{r},{c}' for r, c in p)}", file=out)
    return EXIT_NEGATIVE


def cmd_grid_dist(args, out) -> int:
    try:
        gg = parse_grid_file(_read(args.file))
    except ParseError as exc:
        raise ParseError(f"{args.file}: {exc}") from None
    res = grid.min_weight_path(gg, args.source, args.target)
    if res is None:
        print("unreachable", file=out)
        return EXIT_NEGATIVE
    points, weight = res
    print(f"marked_distance {weight.marked_count}", file=out)
    print(f"edges {weight.b} offset {weight.a} total {weight.total}", file=out)
    print("path " + " ".join(f"{r},{c}" for r, c in points), file=out)
    return EXIT_OK


def cmd_dot(args, out) -> int:
    doc = parse_document(_read(args.file))
    out.write(to_dot(doc.graph, doc.name))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotcanon",
        description="Canonical codes and isomorphism for graphs with rotation schemes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", help="print the canonical code of a graph file")
    p.add_argument("file")
    p.add_argument("--oriented", action="store_true", help="use the file's rotation as given")
    p.add_argument("--trust-input", action="store_true", help="skip 3-connectivity/planarity checks")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("iso", help="decide isomorphism of two graph files")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--oriented", action="store_true", help="maps must respect the rotations")
    p.add_argument("--allow-reflection", action="store_true", help="also accept mirror maps")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("gen", help="generate labelled instance pairs")
    gen = p.add_subparsers(dest="generator", required=True)
    q = gen.add_parser("ord", help="pair encoding whether i < j on a line of n vertices")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--i", type=int, required=True)
    q.add_argument("--j", type=int, required=True)
    q.add_argument("--target", choices=FAMILIES, required=True)
    q.add_argument("--out-prefix", required=True)
    q.set_defaults(func=cmd_gen)

    p = sub.add_parser("grid", help="grid-graph weight checks")
    g = p.add_subparsers(dest="grid_command", required=True)
    q = g.add_parser("verify", help="check minimum-weight path uniqueness exhaustively")
    q.add_argument("--rows", type=int, required=True)
    q.add_argument("--cols", type=int, required=True)
    q.add_argument("--seed", type=int, help="random subgrid instead of the full grid")
    q.add_argument("--density", type=float, default=0.7)
    q.add_argument("--weight", choices=("w", "w0", "unit"), default="w")
    q.set_defaults(func=cmd_grid_verify)
    q = g.add_parser("dist", help="marked distance along the minimum-weight path")
    q.add_argument("file")
    q.add_argument("--from", dest="source", type=_point, required=True)
    q.add_argument("--to", dest="target", type=_point, required=True)
    q.set_defaults(func=cmd_grid_dist)

    p = sub.add_parser("dot", help="export a graph file as DOT")
    p.add_argument("file")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvariantError, ConstructionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (PreconditionError, SizeGuardError, GraphDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
