"""Canonical codes for oriented graphs and the isomorphism deciders built on them.

The code of ``(G, rho, (s, t))`` is computed in three steps: a spanning tree
grown by distance layers from ``s``, a traversal listing every dart once, and
a renaming of vertices by first occurrence. :func:`canonical_spanning_tree`,
:func:`canonical_edge_list` and :func:`rename` implement the steps literally;
:func:`code` runs the fused kernel and must agree with their composition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from . import kernels
from .errors import (
    DisconnectedGraphError,
    GraphDomainError,
    InvariantError,
    PreconditionError,
)
from .graph import (
    Dart,
    Graph,
    OrientedGraph,
    bfs_distances,
    connectivity_level,
    find_planar_rotation,
    is_planar_rotation,
)

CanonicalCode = tuple  # tuple of (int, int) pairs
EdgeList = tuple  # tuple of Dart

GraphLike = Union[Graph, OrientedGraph]


@dataclass(frozen=True)
class SpanningTree:
    """Tree edges oriented parent -> child, rooted at ``root``."""

    root: object
    edges: frozenset

    def contains(self, u, v) -> bool:
        return Dart(u, v) in self.edges or Dart(v, u) in self.edges

    def parent(self, v):
        for d in self.edges:
            if d.head == v:
                return d.tail
        return None


@dataclass(frozen=True, eq=False)
class Isomorphism:
    """Vertex bijection ``G -> H``."""

    mapping: Mapping

    def __getitem__(self, v):
        return self.mapping[v]

    def __len__(self):
        return len(self.mapping)

    def items(self):
        return self.mapping.items()

    def __eq__(self, other):
        return isinstance(other, Isomorphism) and dict(self.mapping) == dict(other.mapping)

    def preserves_edges(self, g: Graph, h: Graph) -> bool:
        m = self.mapping
        if set(m) != set(g.vertices) or set(m.values()) != set(h.vertices):
            return False
        if len(set(m.values())) != len(m) or g.num_edges != h.num_edges:
            return False
        return all(h.has_edge(m[u], m[v]) for u, v in g.edges)

    def preserves_rotation(self, og: OrientedGraph, oh: OrientedGraph) -> bool:
        if not self.preserves_edges(og.graph, oh.graph):
            return False
        m = self.mapping
        for d in og.graph.darts():
            e = og.rotation.successor(d)
            if oh.rotation.successor(Dart(m[d.tail], m[d.head])) != Dart(m[e.tail], m[e.head]):
                return False
        return True


# -- the three steps, literal reference versions ------------------------------


def _check_designated(g: Graph, designated) -> Dart:
    designated = Dart(*designated)
    if not g.has_edge(*designated):
        raise GraphDomainError(f"designated dart {tuple(designated)!r} is not an edge")
    return designated


def canonical_spanning_tree(og: OrientedGraph, designated) -> SpanningTree:
    """Spanning tree grown from the tail of ``designated`` by distance layers.

    A vertex ``w`` at distance ``d >= 2`` is attached by walking from the
    designated dart: rotate the active dart ``(u, v)`` by ``rho_u`` while ``v``
    is not closer to ``w`` than ``u``, then step over it to ``rho_v(v, u)``.
    After ``d - 1`` steps the tail of the active dart is ``w``'s parent.
    """
    g = og.graph
    s, t = designated = _check_designated(g, designated)
    if not g.is_connected():
        raise DisconnectedGraphError("the canonical spanning tree needs a connected graph")
    rho = og.rotation
    to = {w: bfs_distances(g, w) for w in g.vertices}
    from_s = to[s]
    edges = {Dart(s, v) for v in g.neighbors(s)}
    for w in g.vertices:
        d = from_s[w]
        if d < 2:
            continue
        dw = to[w]
        a = designated
        for _ in range(d - 1):
            while dw[a.tail] <= dw[a.head]:
                a = rho.successor(a)
            a = rho.successor(a.reverse())
        if dw[a.tail] != 1 or from_s[a.tail] != d - 1:
            raise InvariantError(f"tree walk towards {w!r} ended at {a.tail!r}")
        edges.add(Dart(a.tail, w))
    return SpanningTree(s, frozenset(edges))


def canonical_edge_list(og: OrientedGraph, tree: SpanningTree, designated) -> EdgeList:
    """Every dart once, starting at ``designated``.

    After a tree dart ``(u, v)`` comes ``rho_v(v, u)``; after a non-tree dart
    comes ``rho_u(u, v)``.
    """
    g = og.graph
    designated = _check_designated(g, designated)
    if not tree.contains(*designated):
        raise GraphDomainError("designated edge must belong to the spanning tree")
    rho = og.rotation
    limit = 2 * g.num_edges
    out = []
    a = designated
    while True:
        out.append(a)
        if tree.contains(*a):
            a = rho.successor(a.reverse())
        else:
            a = rho.successor(a)
        if a == designated:
            break
        if len(out) > limit:
            raise InvariantError("edge list walk did not close; rotation is corrupt")
    if len(out) != limit:
        raise InvariantError(f"edge list closed after {len(out)} of {limit} darts")
    return tuple(out)


def rename(edges: EdgeList) -> CanonicalCode:
    """Replace each vertex by the rank of its first occurrence in ``edges``."""
    rank = {}
    out = []
    for u, v in edges:
        pair = []
        for x in (u, v):
            if x not in rank:
                rank[x] = len(rank) + 1
            pair.append(rank[x])
        out.append(tuple(pair))
    return tuple(out)


# -- fast path -----------------------------------------------------------------


def _pairs(flat) -> CanonicalCode:
    return tuple(zip(flat[0::2], flat[1::2]))


def _walk(og: OrientedGraph, start: int, target=None, mode=kernels.CMP_NONE):
    g = og.graph
    tail, head, _ = g._dart_tables
    res = kernels.code_walk(
        start, og._rot_array, tail, head, g._dist, g.num_vertices, target, mode
    )
    if res is None:
        return None
    flat, darts = res
    if len(darts) != 2 * g.num_edges:
        raise InvariantError(
            f"edge list closed after {len(darts)} of {2 * g.num_edges} darts"
        )
    return flat, darts


def code(og: OrientedGraph, designated) -> CanonicalCode:
    """Canonical code of ``og`` with respect to the designated dart."""
    g = og.graph
    designated = _check_designated(g, designated)
    if not g.is_connected():
        raise DisconnectedGraphError("codes are defined for connected graphs")
    flat, _ = _walk(og, g.dart_id(designated))
    return _pairs(flat)


def _first_occurrence(g: Graph, darts) -> list:
    tail, head, _ = g._dart_tables
    seen = set()
    order = []
    for d in darts:
        for x in (tail[d], head[d]):
            if x not in seen:
                seen.add(x)
                order.append(g.vertices[x])
    return order


@dataclass
class _Best:
    flat: list
    og: OrientedGraph
    darts: list


def _minimize(variants) -> _Best | None:
    """Smallest code over every dart of every oriented graph in ``variants``."""
    best = None
    for og in variants:
        for d in range(2 * og.graph.num_edges):
            if best is None:
                flat, darts = _walk(og, d)
                best = _Best(flat, og, darts)
                continue
            res = _walk(og, d, best.flat, kernels.CMP_MIN)
            if res is not None and res[0] < best.flat:
                best = _Best(res[0], og, res[1])
    return best


# -- planar 3-connected graphs -------------------------------------------------


def _prepare_planar3(x: GraphLike, trust_input: bool) -> OrientedGraph:
    """Oriented graph with a planar rotation, checking the preconditions."""
    if isinstance(x, OrientedGraph):
        g, rotation = x.graph, x.rotation
    else:
        g, rotation = x, None
    if not g.is_connected():
        raise PreconditionError("graph is not connected")
    # K1, K2 and K3 are as connected as their size allows
    degenerate = g.num_vertices <= 3 and 2 * g.num_edges == g.num_vertices * (g.num_vertices - 1)
    if not trust_input and not degenerate and connectivity_level(g) < 3:
        raise PreconditionError("graph is not 3-connected")
    if rotation is None:
        rotation = find_planar_rotation(g)
        if rotation is None:
            raise PreconditionError("graph has no planar rotation scheme")
        return OrientedGraph(g, rotation)
    og = x
    if not trust_input and not is_planar_rotation(og):
        raise PreconditionError("supplied rotation scheme is not planar")
    return og


def canonical_form_planar3(g: GraphLike, *, trust_input: bool = False) -> CanonicalCode:
    """Smallest code over all darts and both planar rotation schemes.

    ``g`` may carry a planar rotation (as an :class:`OrientedGraph`); otherwise
    one is searched. With ``trust_input`` the 3-connectivity and planarity
    checks are skipped.
    """
    og = _prepare_planar3(g, trust_input)
    best = _minimize((og, og.inverse()))
    return () if best is None else _pairs(best.flat)


def is_isomorphic_planar3(
    g: GraphLike, h: GraphLike, *, trust_input: bool = False
) -> Isomorphism | None:
    """Decide isomorphism of planar 3-connected graphs, returning a witness.

    One dart and one planar rotation of ``g`` are fixed; every dart of ``h``
    under both of its planar rotations is tried against that code.
    """
    og = _prepare_planar3(g, trust_input)
    oh = _prepare_planar3(h, trust_input)
    gg, hh = og.graph, oh.graph
    if gg.num_vertices != hh.num_vertices or gg.num_edges != hh.num_edges:
        return None
    if gg.num_edges == 0:
        return Isomorphism({gg.vertices[0]: hh.vertices[0]})
    flat_g, darts_g = _walk(og, 0)
    for variant in (oh, oh.inverse()):
        for d in range(2 * hh.num_edges):
            res = _walk(variant, d, flat_g, kernels.CMP_EQ)
            if res is None:
                continue
            phi = Isomorphism(
                dict(zip(_first_occurrence(gg, darts_g), _first_occurrence(hh, res[1])))
            )
            if not phi.preserves_edges(gg, hh):
                raise InvariantError("matching codes produced a map that is not an isomorphism")
            return phi
    return None


# -- oriented graphs -----------------------------------------------------------


def _component_bests(og: OrientedGraph) -> list:
    out = []
    for vs in og.graph.components():
        comp = og.component(vs)
        best = _minimize((comp,))
        code_ = () if best is None else _pairs(best.flat)
        out.append((code_, comp, best))
    out.sort(key=lambda item: item[0])
    return out


def oriented_canonical_form(og: OrientedGraph) -> tuple:
    """Sorted per-component minimum codes under the given rotation only."""
    return tuple(code_ for code_, _, _ in _component_bests(og))


def is_isomorphic_oriented(
    g: OrientedGraph, h: OrientedGraph, *, allow_reflection: bool = False
) -> Isomorphism | None:
    """Isomorphism mapping ``rho_G`` onto ``rho_H``, or ``None``.

    With ``allow_reflection`` a map onto ``rho_H`` inverted is also accepted.
    """
    if g.graph.num_vertices != h.graph.num_vertices or g.graph.num_edges != h.graph.num_edges:
        return None
    comps_g = _component_bests(g)
    targets = (h, h.inverse()) if allow_reflection else (h,)
    for target in targets:
        comps_h = _component_bests(target)
        if [c for c, _, _ in comps_g] != [c for c, _, _ in comps_h]:
            continue
        mapping = {}
        for (_, cg, bg), (_, ch, bh) in zip(comps_g, comps_h):
            if bg is None:
                mapping[cg.graph.vertices[0]] = ch.graph.vertices[0]
                continue
            mapping.update(
                zip(
                    _first_occurrence(bg.og.graph, bg.darts),
                    _first_occurrence(bh.og.graph, bh.darts),
                )
            )
        phi = Isomorphism(mapping)
        if not phi.preserves_rotation(g, target):
            raise InvariantError("matching codes produced a map that breaks the rotation")
        return phi
    return None
