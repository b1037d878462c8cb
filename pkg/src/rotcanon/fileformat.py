"""Line-oriented text formats for graphs and grid graphs, plus DOT export.

Graph files::

    # comment
    graph <name>
    vertex <token>
    edge <u> <v>
    rot <v> <n1> ... <nk>

Grid files::

    grid <rows> <cols> <n>
    gedge <r1> <c1> <r2> <c2> [marked]

Vertex tokens are read as strings. A graph with at least one ``rot`` line is
oriented, and then every vertex with neighbours needs exactly one fan.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import GraphDomainError, ParseError
from .graph import Graph, OrientedGraph, RotationScheme
from .grid import GridEdge, GridGraph

AnyGraph = Union[Graph, OrientedGraph]


@dataclass(frozen=True)
class GraphDocument:
    name: str
    graph: AnyGraph

    @property
    def oriented(self) -> bool:
        return isinstance(self.graph, OrientedGraph)


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield lineno, body


def parse_document(text: str) -> GraphDocument:
    name = None
    vertices = {}
    edges = {}
    fans = {}
    first_rot = None
    for lineno, words in _lines(text):
        kind, args = words[0], words[1:]
        if name is None and kind != "graph":
            raise ParseError("expected 'graph <name>' before anything else", lineno)
        if kind == "graph":
            if name is not None:
                raise ParseError("second 'graph' header", lineno)
            if len(args) != 1:
                raise ParseError("usage: graph <name>", lineno)
            name = args[0]
        elif kind == "vertex":
            if len(args) != 1:
                raise ParseError("usage: vertex <token>", lineno)
            if args[0] in vertices:
                raise ParseError(f"duplicate vertex {args[0]!r}", lineno)
            vertices[args[0]] = lineno
        elif kind == "edge":
            if len(args) != 2:
                raise ParseError("usage: edge <u> <v>", lineno)
            u, v = args
            for x in (u, v):
                if x not in vertices:
                    raise ParseError(f"unknown vertex {x!r}", lineno)
            if u == v:
                raise ParseError(f"self-loop at {u!r}", lineno)
            key = frozenset((u, v))
            if key in edges:
                raise ParseError(f"duplicate edge {u} {v}", lineno)
            edges[key] = (u, v)
        elif kind == "rot":
            if not args:
                raise ParseError("usage: rot <v> <n1> ... <nk>", lineno)
            v, fan = args[0], args[1:]
            for x in args:
                if x not in vertices:
                    raise ParseError(f"unknown vertex {x!r}", lineno)
            if v in fans:
                raise ParseError(f"second fan for {v!r}", lineno)
            if len(set(fan)) != len(fan):
                raise ParseError(f"fan of {v!r} repeats a neighbour", lineno)
            fans[v] = (fan, lineno)
            first_rot = first_rot or lineno
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno)
    if name is None:
        raise ParseError("missing 'graph <name>' header")
    if not vertices:
        raise ParseError("a graph needs at least one vertex")
    g = Graph.from_edges(edges.values(), vertices)
    if first_rot is None:
        return GraphDocument(name, g)
    for v in g.vertices:
        nb = set(g.neighbors(v))
        if v not in fans:
            if nb:
                raise ParseError(f"no fan given for {v!r}", first_rot)
            continue
        fan, lineno = fans[v]
        if set(fan) != nb:
            raise ParseError(f"fan of {v!r} does not list exactly its neighbours", lineno)
    rotation = RotationScheme.from_fans({v: fan for v, (fan, _) in fans.items() if fan})
    return GraphDocument(name, OrientedGraph(g, rotation))


def parse_graph_file(text: str) -> AnyGraph:
    """Graph, or OrientedGraph when the text has a rotation block."""
    return parse_document(text).graph


def _token(v) -> str:
    tok = str(v)
    if not tok or any(ch.isspace() for ch in tok) or "#" in tok:
        raise GraphDomainError(f"vertex {v!r} cannot be written as a token")
    return tok


def serialize_graph(g: AnyGraph, name: str = "g") -> str:
    """Deterministic text form; vertices and edges in sorted order."""
    og = g if isinstance(g, OrientedGraph) else None
    base = og.graph if og else g
    out = [f"graph {_token(name)}"]
    out += [f"vertex {_token(v)}" for v in base.vertices]
    out += [f"edge {_token(u)} {_token(v)}" for u, v in base.edges]
    if og:
        for v in base.vertices:
            fan = og.rotation.fan(v)
            out.append(" ".join(["rot", _token(v)] + [_token(u) for u in fan]))
    return "\n".join(out) + "\n"


def _quote(v) -> str:
    return '"' + str(v).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: AnyGraph, name: str = "g") -> str:
    """DOT text; each edge once, fans as a ``rot`` vertex attribute."""
    og = g if isinstance(g, OrientedGraph) else None
    base = og.graph if og else g
    out = [f"graph {_quote(name)} {{"]
    for v in base.vertices:
        if og and og.rotation.fan(v):
            fan = " ".join(str(u) for u in og.rotation.fan(v))
            out.append(f"  {_quote(v)} [rot={_quote(fan)}];")
        else:
            out.append(f"  {_quote(v)};")
    out += [f"  {_quote(u)} -- {_quote(v)};" for u, v in base.edges]
    out.append("}")
    return "\n".join(out) + "\n"


# -- grids -------------------------------------------------------------------------


def _ints(args, lineno, what):
    try:
        return [int(x) for x in args]
    except ValueError:
        raise ParseError(f"{what} expects integers", lineno) from None


def parse_grid_file(text: str) -> GridGraph:
    header = None
    edges = []
    seen = set()
    for lineno, words in _lines(text):
        kind, args = words[0], words[1:]
        if kind == "grid":
            if header is not None:
                raise ParseError("second 'grid' header", lineno)
            if len(args) != 3:
                raise ParseError("usage: grid <rows> <cols> <n>", lineno)
            header = _ints(args, lineno, "grid")
        elif kind == "gedge":
            if header is None:
                raise ParseError("'gedge' before 'grid' header", lineno)
            marked = False
            if len(args) == 5:
                if args[4] != "marked":
                    raise ParseError(f"unexpected flag {args[4]!r}", lineno)
                marked = True
            elif len(args) != 4:
                raise ParseError("usage: gedge r1 c1 r2 c2 [marked]", lineno)
            r1, c1, r2, c2 = _ints(args[:4], lineno, "gedge")
            key = ((r1, c1), (r2, c2))
            if key in seen:
                raise ParseError(f"duplicate edge {key}", lineno)
            seen.add(key)
            edges.append((GridEdge(*key, marked), lineno))
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno)
    if header is None:
        raise ParseError("missing 'grid <rows> <cols> <n>' header")
    rows, cols, n = header
    for e, lineno in edges:
        try:
            GridGraph(rows, cols, (e,), n)
        except GraphDomainError as exc:
            raise ParseError(str(exc), lineno) from None
    try:
        return GridGraph(rows, cols, tuple(e for e, _ in edges), n)
    except GraphDomainError as exc:
        raise ParseError(str(exc)) from None


def serialize_grid(gg: GridGraph) -> str:
    out = [f"grid {gg.rows} {gg.cols} {gg.n}"]
    for e in gg.edges:
        line = f"gedge {e.tail[0]} {e.tail[1]} {e.head[0]} {e.head[1]}"
        out.append(line + (" marked" if e.marked else ""))
    return "\n".join(out) + "\n"
