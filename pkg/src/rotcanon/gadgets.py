"""Instance generators that encode a comparison ``i < j`` as an isomorphism question.

Every family starts from the same tree ``T``: a root ``r`` with two paths
``u1..un`` and ``w1..wn``, where the edge ``u_i u_{i+1}`` is replaced by
``w_i u_{i+1}``. The first graph marks ``u_j``, the second marks ``w_j``;
they are isomorphic exactly when ``i < j`` (swapping the two paths above
``w_i`` is then an isomorphism). ``i == n`` leaves nothing to swap and is
answered with a fixed non-isomorphic pair.

The module also holds brute-force isomorphism oracles that share no code
with the canonical-code deciders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConstructionError, GraphDomainError, SizeGuardError
from .families import complete, path, wheel
from .graph import (
    Graph,
    OrientedGraph,
    RotationScheme,
    connectivity_level,
    find_planar_rotation,
    is_planar_rotation,
)

FAMILIES = ("tree", "planar3", "oriented-tree")


@dataclass(frozen=True)
class OrdInstance:
    n: int
    i: int
    j: int

    def __post_init__(self):
        if self.n < 2:
            raise GraphDomainError("n must be at least 2")
        for name in ("i", "j"):
            k = getattr(self, name)
            if not 1 <= k <= self.n:
                raise GraphDomainError(f"{name}={k} is outside 1..{self.n}")

    @property
    def label(self) -> bool:
        return self.i < self.j

    @property
    def degenerate(self) -> bool:
        return self.i == self.n


@dataclass(frozen=True)
class GadgetPair:
    first: object
    second: object
    label: bool
    family: str
    instance: OrdInstance

    def manifest(self) -> str:
        inst = self.instance
        return (
            f"label {str(self.label).lower()} family {self.family} "
            f"n {inst.n} i {inst.i} j {inst.j}"
        )


# -- the base tree ---------------------------------------------------------------


def _tree_parents(inst: OrdInstance) -> dict:
    """Parent of every non-root vertex of ``T``."""
    n, i = inst.n, inst.i
    parent = {"u1": "r", "w1": "r"}
    for k in range(1, n):
        parent[f"w{k + 1}"] = f"w{k}"
        parent[f"u{k + 1}"] = f"w{k}" if k == i else f"u{k}"
    return parent


def _children(parent: dict) -> dict:
    out = {}
    for child, p in parent.items():
        out.setdefault(p, []).append(child)
    for kids in out.values():
        kids.sort()
    return out


def _marked(inst: OrdInstance, which: int) -> str:
    return f"u{inst.j}" if which == 1 else f"w{inst.j}"


def _marker_names(which: int) -> tuple:
    return ("x0", "x1") if which == 1 else ("y0", "y1")


def _named(g):
    """Relabel integer vertices ``k`` as tokens ``vk``."""
    base = g.graph if isinstance(g, OrientedGraph) else g
    return g.relabel({v: f"v{v}" for v in base.vertices})


def build_trees(inst: OrdInstance) -> GadgetPair:
    """``T`` with two leaves hung on ``u_j`` (first) or ``w_j`` (second)."""
    if inst.degenerate:
        return GadgetPair(_named(path(2)), _named(path(3)), False, "tree", inst)
    parent = _tree_parents(inst)
    graphs = []
    for which in (1, 2):
        edges = [(p, c) for c, p in parent.items()]
        anchor = _marked(inst, which)
        edges += [(anchor, m) for m in _marker_names(which)]
        graphs.append(Graph.from_edges(edges))
    return GadgetPair(graphs[0], graphs[1], inst.label, "tree", inst)


def build_oriented_trees(inst: OrdInstance) -> GadgetPair:
    """The tree pair with fans that keep the path swap rotation-preserving.

    At ``w_i`` the first graph lists ``w_{i+1}`` before ``u_{i+1}`` and the
    second lists them the other way round; the two marker leaves sit right
    after and at the very end of the marked vertex's fan.
    """
    if inst.degenerate:
        first = OrientedGraph.from_fans({"v0": ["v1"], "v1": ["v0"]})
        second = OrientedGraph.from_fans({"v0": ["v1"], "v1": ["v0", "v2"], "v2": ["v1"]})
        return GadgetPair(first, second, False, "oriented-tree", inst)
    parent = _tree_parents(inst)
    children = _children(parent)
    split = f"w{inst.i}"
    out = []
    for which in (1, 2):
        fans = {}
        for v in ["r", *parent]:
            kids = children.get(v, [])
            if v == split:
                kids = sorted(kids, key=lambda x: x.startswith("u") == (which == 1))
            fan = ([parent[v]] if v in parent else []) + kids
            if v == _marked(inst, which):
                m0, m1 = _marker_names(which)
                fan = [parent[v], m0] + kids + [m1]
                fans[m0] = [v]
                fans[m1] = [v]
            fans[v] = fan
        out.append(OrientedGraph.from_fans(fans))
    return GadgetPair(out[0], out[1], inst.label, "oriented-tree", inst)


# -- planar 3-connected thickening -----------------------------------------------


class _Layout:
    """Vertices with coordinates, edges, and per-dart departure directions."""

    def __init__(self):
        self.pos = {}
        self.edges = []
        self.depart = {}

    def vertex(self, name, x, y):
        self.pos[name] = (x, y)

    def edge(self, a, b, at_a=None, at_b=None):
        self.edges.append((a, b))
        if at_a is not None:
            self.depart[(a, b)] = at_a
        if at_b is not None:
            self.depart[(b, a)] = at_b

    def oriented(self) -> OrientedGraph:
        g = Graph.from_edges(self.edges)

        def angle(v, u):
            dx, dy = self.depart.get(
                (v, u), (self.pos[u][0] - self.pos[v][0], self.pos[u][1] - self.pos[v][1])
            )
            return math.atan2(dy, dx)

        fans = {v: sorted(g.neighbors(v), key=lambda u: angle(v, u)) for v in g.vertices}
        return OrientedGraph(g, RotationScheme.from_fans(fans))


def _arms(inst: OrdInstance) -> tuple:
    """Tree vertices on the three arms leaving ``w_i``, nearest first."""
    n, i = inst.n, inst.i
    up = [f"w{k}" for k in range(i - 1, 0, -1)] + ["r"] + [f"u{k}" for k in range(1, i + 1)]
    left = [f"w{k}" for k in range(i + 1, n + 1)]
    right = [f"u{k}" for k in range(i + 1, n + 1)]
    return up, left, right


def _thickened(inst: OrdInstance, marked: str) -> OrientedGraph:
    lay = _Layout()
    for r in range(3):
        for c in range(3):
            lay.vertex(f"g{r}{c}", c, -r)
    for r in range(3):
        for c in range(3):
            if c < 2:
                lay.edge(f"g{r}{c}", f"g{r}{c + 1}")
            if r < 2:
                lay.edge(f"g{r}{c}", f"g{r + 1}{c}")
    up, left, right = _arms(inst)
    # arm: vertices, attachment cells, origin, forward f, across e
    arms = (
        (up, [f"g0{l}" for l in range(3)], (0, 1), (0, 1), (1, 0)),
        (left, [f"g{l}0" for l in range(3)], (-1, 0), (-1, 0), (0, -1)),
        (right, [f"g{l}2" for l in range(3)], (3, 0), (1, 0), (0, -1)),
    )
    for verts, attach, origin, f, e in arms:
        for k, v in enumerate(verts):
            for l in range(3):
                lay.vertex(
                    f"{v}.{l}",
                    origin[0] + k * f[0] + l * e[0],
                    origin[1] + k * f[1] + l * e[1],
                )
            lay.edge(f"{v}.0", f"{v}.1")
            lay.edge(f"{v}.1", f"{v}.2")
            prev = [f"{verts[k - 1]}.{l}" for l in range(3)] if k else attach
            for l in range(3):
                lay.edge(prev[l], f"{v}.{l}")
            last = k == len(verts) - 1
            if last:
                # cap closing the tip of the arm
                lay.edge(
                    f"{v}.0", f"{v}.2", (f[0] - e[0], f[1] - e[1]), (f[0] + e[0], f[1] + e[1])
                )
            if v != marked:
                continue
            if last:
                x, y = lay.pos[f"{v}.1"]
                lay.vertex("z", x + 0.5 * f[0], y + 0.5 * f[1])
                for l in range(3):
                    lay.edge("z", f"{v}.{l}")
            else:
                lay.edge(f"{v}.0", f"{v}.2", (-e[0], -e[1]), (e[0], e[1]))
    if marked == f"w{inst.i}":
        lay.vertex("z", 1, -3)
        for c in range(3):
            lay.edge("z", f"g2{c}")
    og = lay.oriented()
    if connectivity_level(og.graph) < 3:
        raise ConstructionError(f"thickened graph for {inst} is not 3-connected")
    if not is_planar_rotation(og):
        raise ConstructionError(f"rotation built for {inst} is not planar")
    return og


def build_planar3(inst: OrdInstance) -> GadgetPair:
    """Planar 3-connected pair with the comparison's label.

    Every tree vertex other than ``w_i`` becomes a ladder section of three
    vertices, ``w_i`` becomes a 3x3 grid, and the arm tips
    are capped. The mark is a chord across a section, an apex over a tip, or
    an apex under the grid. Both graphs come with their planar rotation.
    """
    if inst.degenerate:
        pair = []
        for g in (complete(4), wheel(4)):
            pair.append(_named(OrientedGraph(g, find_planar_rotation(g))))
        return GadgetPair(pair[0], pair[1], False, "planar3", inst)
    first = _thickened(inst, _marked(inst, 1))
    second = _thickened(inst, _marked(inst, 2))
    return GadgetPair(first, second, inst.label, "planar3", inst)


def build_pair(family: str, inst: OrdInstance) -> GadgetPair:
    builders = {"tree": build_trees, "planar3": build_planar3, "oriented-tree": build_oriented_trees}
    if family not in builders:
        raise GraphDomainError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return builders[family](inst)


# -- brute-force oracles -----------------------------------------------------------


def _refine(graphs) -> list:
    """Stable colour refinement run jointly over the given graphs."""
    colours = [{v: g.degree(v) for v in g.vertices} for g in graphs]
    classes = len({c for col in colours for c in col.values()})
    while True:
        sigs = [
            {v: (col[v], tuple(sorted(col[u] for u in g.neighbors(v)))) for v in g.vertices}
            for g, col in zip(graphs, colours)
        ]
        palette = {s: k for k, s in enumerate(sorted({s for sig in sigs for s in sig.values()}))}
        colours = [{v: palette[s] for v, s in sig.items()} for sig in sigs]
        if len(palette) == classes:
            return colours
        classes = len(palette)


def _search_order(g: Graph, colour: dict) -> list:
    """Vertices grouped by component, each grown breadth-first from a rare colour."""
    freq = {}
    for c in colour.values():
        freq[c] = freq.get(c, 0) + 1
    order, seen = [], set()
    for comp in g.components():
        start = min(comp, key=lambda v: (freq[colour[v]], comp.index(v)))
        queue = [start]
        seen.add(start)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return order


def _backtrack(g: Graph, h: Graph, accept_vertex, max_vertices: int, max_steps: int):
    if g.num_vertices > max_vertices or h.num_vertices > max_vertices:
        raise SizeGuardError(f"brute-force search is limited to {max_vertices} vertices")
    if g.num_vertices != h.num_vertices or g.num_edges != h.num_edges:
        return None
    cg, ch = _refine([g, h])
    if sorted(cg.values()) != sorted(ch.values()):
        return None
    order = _search_order(g, cg)
    by_colour = {}
    for x in h.vertices:
        by_colour.setdefault(ch[x], []).append(x)
    phi, used = {}, set()
    steps = [0]

    def rec(k):
        steps[0] += 1
        if steps[0] > max_steps:
            raise SizeGuardError(f"brute-force search exceeded {max_steps} steps")
        if k == len(order):
            return True
        v = order[k]
        for x in by_colour[cg[v]]:
            if x in used:
                continue
            if any(g.has_edge(v, u) != h.has_edge(x, phi[u]) for u in order[:k]):
                continue
            phi[v] = x
            used.add(x)
            if accept_vertex(phi, v) and rec(k + 1):
                return True
            del phi[v]
            used.discard(x)
        return False

    return dict(phi) if rec(0) else None


def brute_force_iso(g: Graph, h: Graph, *, max_vertices: int = 80, max_steps: int = 2_000_000):
    """Isomorphism ``g -> h`` as a dict, or ``None``, by pruned backtracking."""
    return _backtrack(g, h, lambda phi, v: True, max_vertices, max_steps)


def brute_force_oriented_iso(
    og: OrientedGraph,
    oh: OrientedGraph,
    *,
    allow_reflection: bool = False,
    max_vertices: int = 80,
    max_steps: int = 2_000_000,
):
    """Rotation-preserving isomorphism by backtracking, or ``None``.

    A fan is compared as soon as a vertex and all its neighbours are mapped.
    """
    g = og.graph

    def fan_ok(target, phi, v):
        fan = og.rotation.fan(v)
        if not fan or any(u not in phi for u in fan):
            return True
        image = [phi[u] for u in fan]
        tfan = list(target.rotation.fan(phi[v]))
        k = tfan.index(image[0])
        return tfan[k:] + tfan[:k] == image

    targets = (oh, oh.inverse()) if allow_reflection else (oh,)
    for target in targets:

        def accept(phi, v, target=target):
            return all(fan_ok(target, phi, x) for x in (v, *g.neighbors(v)) if x in phi)

        found = _backtrack(g, target.graph, accept, max_vertices, max_steps)
        if found is not None:
            return found
    return None
