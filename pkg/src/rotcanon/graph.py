"""Graphs, darts, rotation schemes and embedding checks.

Vertices are opaque, ordered tokens. Internally each graph numbers its
vertices in sorted order and its darts as ``2k`` / ``2k + 1`` for the ``k``-th
edge, which is the layout the hot kernels expect.
"""

from __future__ import annotations

import itertools
from array import array
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Mapping, NamedTuple

from . import kernels
from .errors import (
    DisconnectedGraphError,
    GraphDomainError,
    SizeGuardError,
)

Vertex = Hashable

#: Default node budget for the planar rotation search.
DEFAULT_SEARCH_BUDGET = 5_000_000


def sort_vertices(vertices: Iterable[Vertex]) -> tuple:
    """Deterministic order for vertex tokens, tolerating mixed types."""
    vs = list(vertices)
    try:
        return tuple(sorted(vs))
    except TypeError:
        return tuple(sorted(vs, key=lambda v: (type(v).__name__, repr(v))))


class Dart(NamedTuple):
    """Directed occurrence ``tail -> head`` of an undirected edge."""

    tail: Vertex
    head: Vertex

    def reverse(self) -> "Dart":
        return Dart(self.head, self.tail)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph.

    ``vertices`` is kept sorted and ``edges`` holds each edge once as a pair
    ordered like ``vertices``; use :meth:`from_edges` to build one from
    arbitrary input.
    """

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        order = sort_vertices(self.vertices)
        if len(set(order)) != len(order):
            raise GraphDomainError("duplicate vertex")
        if not order:
            raise GraphDomainError("a graph needs at least one vertex")
        pos = {v: i for i, v in enumerate(order)}
        seen = set()
        norm = []
        for e in self.edges:
            u, v = e
            if u not in pos or v not in pos:
                missing = u if u not in pos else v
                raise GraphDomainError(f"edge {u!r}-{v!r} uses undeclared vertex {missing!r}")
            if u == v:
                raise GraphDomainError(f"self-loop at {u!r}")
            key = (u, v) if pos[u] < pos[v] else (v, u)
            if key in seen:
                raise GraphDomainError(f"duplicate edge {u!r}-{v!r}")
            seen.add(key)
            norm.append(key)
        norm.sort(key=lambda e: (pos[e[0]], pos[e[1]]))
        object.__setattr__(self, "vertices", order)
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, edges: Iterable, vertices: Iterable[Vertex] = ()) -> "Graph":
        edges = [tuple(e) for e in edges]
        vs = set(vertices)
        for u, v in edges:
            vs.add(u)
            vs.add(v)
        return cls(tuple(vs), tuple(edges))

    # -- indexed view used by the kernels ---------------------------------

    @cached_property
    def _pos(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _adj(self) -> tuple:
        adj = [[] for _ in self.vertices]
        pos = self._pos
        for u, v in self.edges:
            adj[pos[u]].append(pos[v])
            adj[pos[v]].append(pos[u])
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def _dart_tables(self):
        pos = self._pos
        tail = array("i")
        head = array("i")
        ids = {}
        for k, (u, v) in enumerate(self.edges):
            tail.append(pos[u])
            head.append(pos[v])
            tail.append(pos[v])
            head.append(pos[u])
            ids[Dart(u, v)] = 2 * k
            ids[Dart(v, u)] = 2 * k + 1
        return tail, head, ids

    @cached_property
    def _dist(self) -> array:
        """All-pairs hop distances, flattened, ``-1`` when unreachable."""
        n = len(self.vertices)
        out = array("i", [-1]) * (n * n)
        adj = self._adj
        for s in range(n):
            base = s * n
            out[base + s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                dv = out[base + v] + 1
                for u in adj[v]:
                    if out[base + u] < 0:
                        out[base + u] = dv
                        queue.append(u)
        return out

    def dart_id(self, dart) -> int:
        try:
            return self._dart_tables[2][Dart(*dart)]
        except KeyError:
            raise GraphDomainError(f"{tuple(dart)!r} is not a dart of the graph") from None

    def dart_from_id(self, k: int) -> Dart:
        tail, head, _ = self._dart_tables
        return Dart(self.vertices[tail[k]], self.vertices[head[k]])

    # -- queries ------------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def __contains__(self, v) -> bool:
        return v in self._pos

    def _check_vertex(self, v):
        if v not in self._pos:
            raise GraphDomainError(f"unknown vertex {v!r}")

    def neighbors(self, v) -> tuple:
        """Neighbours of ``v`` in vertex order."""
        self._check_vertex(v)
        return tuple(self.vertices[i] for i in self._adj[self._pos[v]])

    def degree(self, v) -> int:
        self._check_vertex(v)
        return len(self._adj[self._pos[v]])

    def has_edge(self, u, v) -> bool:
        return Dart(u, v) in self._dart_tables[2]

    def darts(self, v=None) -> tuple:
        """All darts, or the fan ``E_v`` of darts leaving ``v``."""
        if v is None:
            return tuple(self.dart_from_id(k) for k in range(2 * len(self.edges)))
        return tuple(Dart(v, u) for u in self.neighbors(v))

    def components(self) -> list:
        """Connected components as sorted vertex tuples, ordered by first vertex."""
        n = len(self.vertices)
        comp = [-1] * n
        out = []
        for s in range(n):
            if comp[s] >= 0:
                continue
            comp[s] = len(out)
            members = [s]
            stack = [s]
            while stack:
                v = stack.pop()
                for u in self._adj[v]:
                    if comp[u] < 0:
                        comp[u] = comp[s]
                        members.append(u)
                        stack.append(u)
            out.append(tuple(self.vertices[i] for i in sorted(members)))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def induced(self, vertices: Iterable[Vertex]) -> "Graph":
        keep = set(vertices)
        for v in keep:
            self._check_vertex(v)
        return Graph(tuple(keep), tuple(e for e in self.edges if e[0] in keep and e[1] in keep))

    def relabel(self, mapping: Mapping) -> "Graph":
        """Image of the graph under the bijection ``mapping``."""
        if len(set(mapping[v] for v in self.vertices)) != len(self.vertices):
            raise GraphDomainError("relabeling is not injective")
        return Graph(
            tuple(mapping[v] for v in self.vertices),
            tuple((mapping[u], mapping[v]) for u, v in self.edges),
        )


def _normalize_fan(fan: tuple, order_key) -> tuple:
    if not fan:
        return fan
    k = min(range(len(fan)), key=lambda i: order_key[fan[i]])
    return fan[k:] + fan[:k]


@dataclass(frozen=True)
class RotationScheme:
    """One cyclic order ``rho_v`` of the darts leaving each vertex.

    Fans are stored as neighbour tuples rotated so that the smallest neighbour
    comes first; two schemes compare equal iff every cyclic order agrees.
    Vertices without incident edges carry no fan.
    """

    fans: tuple = field()

    def __post_init__(self):
        items = []
        for v, fan in self.fans:
            fan = tuple(fan)
            if len(set(fan)) != len(fan):
                raise GraphDomainError(f"fan of {v!r} repeats a neighbour")
            if v in fan:
                raise GraphDomainError(f"fan of {v!r} contains the vertex itself")
            if fan:
                items.append((v, fan))
        verts = [v for v, _ in items]
        if len(set(verts)) != len(verts):
            raise GraphDomainError("vertex listed twice in rotation")
        allv = set(verts)
        for _, fan in items:
            allv.update(fan)
        order = {v: i for i, v in enumerate(sort_vertices(allv))}
        items = [(v, _normalize_fan(fan, order)) for v, fan in items]
        items.sort(key=lambda it: order[it[0]])
        object.__setattr__(self, "fans", tuple(items))

    @classmethod
    def from_fans(cls, fans: Mapping) -> "RotationScheme":
        """Build from ``{v: [n1, n2, ...]}`` with neighbours in cyclic order."""
        return cls(tuple((v, tuple(f)) for v, f in fans.items()))

    @classmethod
    def from_successors(cls, succ: Mapping) -> "RotationScheme":
        """Build from a dart permutation ``{(v, a): (v, b), ...}``.

        Each vertex's darts must form a single cycle.
        """
        by_vertex = {}
        for d, e in succ.items():
            d, e = Dart(*d), Dart(*e)
            if d.tail != e.tail:
                raise GraphDomainError(f"successor of {d} leaves a different vertex")
            by_vertex.setdefault(d.tail, {})[d.head] = e.head
        fans = {}
        for v, nxt in by_vertex.items():
            if set(nxt.values()) != set(nxt):
                raise GraphDomainError(f"rotation at {v!r} is not a permutation")
            start = next(iter(nxt))
            cyc = [start]
            x = nxt[start]
            while x != start:
                cyc.append(x)
                x = nxt[x]
            if len(cyc) != len(nxt):
                raise GraphDomainError(f"rotation at {v!r} has more than one cycle")
            fans[v] = cyc
        return cls.from_fans(fans)

    @cached_property
    def _fan_map(self) -> dict:
        return dict(self.fans)

    @cached_property
    def _succ(self) -> dict:
        out = {}
        for v, fan in self.fans:
            k = len(fan)
            for i, u in enumerate(fan):
                out[Dart(v, u)] = Dart(v, fan[(i + 1) % k])
        return out

    def fan(self, v) -> tuple:
        return self._fan_map.get(v, ())

    def successor(self, dart) -> Dart:
        """``rho_v(dart)`` for the tail ``v`` of ``dart``."""
        try:
            return self._succ[Dart(*dart)]
        except KeyError:
            raise GraphDomainError(f"{tuple(dart)!r} is not covered by the rotation") from None

    def darts(self) -> tuple:
        return tuple(self._succ)

    def inverse(self) -> "RotationScheme":
        return invert_rotation(self)

    def relabel(self, mapping: Mapping) -> "RotationScheme":
        return RotationScheme(
            tuple((mapping[v], tuple(mapping[u] for u in fan)) for v, fan in self.fans)
        )

    def as_dict(self) -> dict:
        return {v: list(fan) for v, fan in self.fans}


@dataclass(frozen=True)
class OrientedGraph:
    """A graph together with a rotation scheme over exactly its darts."""

    graph: Graph
    rotation: RotationScheme

    def __post_init__(self):
        g = self.graph
        for v, fan in self.rotation.fans:
            if v not in g:
                raise GraphDomainError(f"rotation mentions unknown vertex {v!r}")
            if set(fan) != set(g.neighbors(v)):
                raise GraphDomainError(f"fan of {v!r} does not match its neighbours")
        for v in g.vertices:
            if g.degree(v) and not self.rotation.fan(v):
                raise GraphDomainError(f"rotation misses vertex {v!r}")

    @classmethod
    def from_fans(cls, fans: Mapping, vertices: Iterable[Vertex] = ()) -> "OrientedGraph":
        """Build graph and rotation at once from cyclic neighbour lists."""
        edges = {}
        vs = set(vertices) | set(fans)
        for v, fan in fans.items():
            for u in fan:
                vs.add(u)
                edges.setdefault(frozenset((u, v)), (v, u))
        return cls(Graph(tuple(vs), tuple(edges.values())), RotationScheme.from_fans(fans))

    @cached_property
    def _rot_array(self) -> array:
        g = self.graph
        rot = array("i", [0]) * (2 * g.num_edges)
        for d, e in self.rotation._succ.items():
            rot[g.dart_id(d)] = g.dart_id(e)
        return rot

    def inverse(self) -> "OrientedGraph":
        return OrientedGraph(self.graph, invert_rotation(self.rotation))

    def relabel(self, mapping: Mapping) -> "OrientedGraph":
        return OrientedGraph(self.graph.relabel(mapping), self.rotation.relabel(mapping))

    def component(self, vertices: Iterable[Vertex]) -> "OrientedGraph":
        sub = self.graph.induced(vertices)
        keep = set(sub.vertices)
        return OrientedGraph(
            sub, RotationScheme(tuple((v, f) for v, f in self.rotation.fans if v in keep))
        )


@dataclass(frozen=True)
class DistanceTable:
    """Hop distances from ``source``; unreachable vertices map to ``None``."""

    source: Vertex
    dist: Mapping

    def __getitem__(self, v):
        return self.dist[v]

    def reachable(self, v) -> bool:
        return self.dist[v] is not None


def bfs_distances(g: Graph, source) -> DistanceTable:
    """Breadth-first hop distances from ``source``."""
    if source not in g:
        raise GraphDomainError(f"unknown source vertex {source!r}")
    dist = {v: None for v in g.vertices}
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if dist[u] is None:
                dist[u] = dist[v] + 1
                queue.append(u)
    return DistanceTable(source, dist)


def _csr(g: Graph):
    offsets = array("i", [0])
    nbrs = array("i")
    for a in g._adj:
        nbrs.extend(a)
        offsets.append(len(nbrs))
    return offsets, nbrs


def connectivity_level(g: Graph) -> int:
    """Vertex connectivity capped at 3 (0 when disconnected).

    Checks every single vertex and every vertex pair for removal.
    """
    offsets, nbrs = _csr(g)
    return kernels.connectivity_level(g.num_vertices, offsets, nbrs)


def invert_rotation(r: RotationScheme) -> RotationScheme:
    return RotationScheme(tuple((v, fan[:1] + fan[:0:-1]) for v, fan in r.fans))


def trace_faces(og: OrientedGraph) -> list:
    """Face cycles of the embedding, each a tuple of darts.

    Successor rule: the dart after ``(u, v)`` is ``rho_v(v, u)``.
    """
    g = og.graph
    rot = og._rot_array
    m2 = len(rot)
    seen = bytearray(m2)
    faces = []
    for d in range(m2):
        if seen[d]:
            continue
        face = []
        e = d
        while not seen[e]:
            seen[e] = 1
            face.append(g.dart_from_id(e))
            e = rot[e ^ 1]
        faces.append(tuple(face))
    return faces


def euler_face_target(g: Graph) -> int:
    """Face count of a planar embedding of the connected graph ``g``."""
    return 2 - g.num_vertices + g.num_edges


def is_planar_rotation(og: OrientedGraph) -> bool:
    """True iff the connected oriented graph satisfies V - E + F = 2."""
    g = og.graph
    if not g.is_connected():
        raise DisconnectedGraphError("planarity of a rotation is defined for connected graphs")
    if g.num_edges == 0:
        return True
    return kernels.count_faces(og._rot_array) == euler_face_target(g)


def _search_fans(g: Graph) -> list:
    return [[g.dart_id(Dart(v, u)) for u in g.neighbors(v)] for v in g.vertices]


def _rotation_from_array(g: Graph, rot) -> RotationScheme:
    fans = {}
    for v in g.vertices:
        nb = g.neighbors(v)
        if not nb:
            continue
        d0 = g.dart_id(Dart(v, nb[0]))
        cyc = [nb[0]]
        d = rot[d0]
        while d != d0:
            cyc.append(g.vertices[g._dart_tables[1][d]])
            d = rot[d]
        fans[v] = cyc
    return RotationScheme.from_fans(fans)


def _planar_search(g: Graph, max_results: int, budget: int) -> list:
    if not g.is_connected():
        raise DisconnectedGraphError("planar rotations are searched on connected graphs")
    if g.num_edges == 0:
        return [RotationScheme(())]
    level = connectivity_level(g)
    mode = kernels.FACES_INDUCED if level >= 3 else kernels.FACES_SIMPLE if level == 2 else kernels.FACES_ANY
    results, complete = kernels.planar_rotations(
        _search_fans(g), 2 * g.num_edges, euler_face_target(g), max_results, budget, mode
    )
    if not complete:
        raise SizeGuardError(
            f"planar rotation search exceeded {budget} nodes on a graph with "
            f"{g.num_vertices} vertices"
        )
    return [_rotation_from_array(g, r) for r in results]


def enumerate_planar_rotations(g: Graph, budget: int = DEFAULT_SEARCH_BUDGET) -> list:
    """All planar rotation schemes of the connected graph ``g``.

    Faces are traced one at a time and every undecided successor is branched
    on, so each scheme is produced once. Partial schemes whose face count can
    no longer reach the Euler target are pruned, and on 2- and 3-connected
    graphs so are faces that could not bound a planar embedding.
    """
    return _planar_search(g, max_results=1 << 30, budget=budget)


def find_planar_rotation(g: Graph, budget: int = DEFAULT_SEARCH_BUDGET):
    """Some planar rotation scheme of ``g``, or ``None`` if there is none."""
    found = _planar_search(g, max_results=1, budget=budget)
    return found[0] if found else None


def all_rotation_schemes(g: Graph, limit: int = 1_000_000) -> Iterator[RotationScheme]:
    """Every rotation scheme of ``g`` by plain product enumeration (no pruning).

    Intended as a brute-force reference on small graphs.
    """
    per_vertex = []
    total = 1
    for v in g.vertices:
        nb = g.neighbors(v)
        if len(nb) <= 2:
            per_vertex.append([nb] if nb else [()])
            continue
        opts = [(nb[0],) + p for p in itertools.permutations(nb[1:])]
        total *= len(opts)
        per_vertex.append(opts)
    if total > limit:
        raise SizeGuardError(f"{total} rotation schemes exceed the limit of {limit}")
    for choice in itertools.product(*per_vertex):
        yield RotationScheme(tuple((v, f) for v, f in zip(g.vertices, choice)))
