"""Small named graph families and seeded random polyhedra."""

from __future__ import annotations

import itertools
import random

from .graph import Graph, OrientedGraph, RotationScheme, connectivity_level


def complete(n: int) -> Graph:
    return Graph.from_edges(itertools.combinations(range(n), 2), range(n))


def path(n: int) -> Graph:
    return Graph.from_edges(((k, k + 1) for k in range(n - 1)), range(n))


def cycle(n: int) -> Graph:
    return Graph.from_edges(((k, (k + 1) % n) for k in range(n)), range(n))


def star(leaves: int) -> Graph:
    return Graph.from_edges((0, k) for k in range(1, leaves + 1))


def wheel(rim: int) -> Graph:
    """Hub ``0`` joined to every vertex of the cycle ``1..rim``."""
    edges = [(0, k) for k in range(1, rim + 1)]
    edges += [(k, k % rim + 1) for k in range(1, rim + 1)]
    return Graph.from_edges(edges)


def prism(k: int) -> Graph:
    """Two ``k``-cycles ``0..k-1`` and ``k..2k-1`` joined by rungs."""
    edges = []
    for a in range(k):
        b = (a + 1) % k
        edges += [(a, b), (k + a, k + b), (a, k + a)]
    return Graph.from_edges(edges)


def cube() -> Graph:
    return Graph.from_edges(
        (a, a ^ (1 << bit)) for a in range(8) for bit in range(3) if a < a ^ (1 << bit)
    )


def bipyramid(k: int) -> Graph:
    """``k``-cycle ``0..k-1`` with apexes ``k`` and ``k+1`` joined to all of it."""
    edges = [(a, (a + 1) % k) for a in range(k)]
    edges += [(a, k) for a in range(k)] + [(a, k + 1) for a in range(k)]
    return Graph.from_edges(edges)


def spider(legs) -> Graph:
    """Centre ``"c"`` with a path of each given length hanging off it."""
    edges = []
    for li, length in enumerate(legs):
        prev = "c"
        for step in range(1, length + 1):
            v = f"l{li}_{step}"
            edges.append((prev, v))
            prev = v
    return Graph.from_edges(edges, ["c"])


def oriented_star(order) -> OrientedGraph:
    """Star with centre ``"s"`` whose fan visits the leaves in ``order``."""
    return OrientedGraph.from_fans({"s": list(order), **{leaf: ["s"] for leaf in order}})


def oriented_spider(legs, leg_order) -> OrientedGraph:
    """Spider whose centre fan visits the legs in ``leg_order``."""
    g = spider(legs)
    fans = {"c": [f"l{li}_1" for li in leg_order]}
    for v in g.vertices:
        if v != "c":
            fans[v] = list(g.neighbors(v))
    return OrientedGraph(g, RotationScheme.from_fans(fans))


def random_triangulation(nv: int, seed: int, flips: int = 40) -> Graph:
    """Simple planar triangulation on ``nv >= 4`` vertices.

    Grown from a tetrahedron by inserting vertices into random faces, then
    shuffled with random edge flips that keep the graph simple.
    """
    rng = random.Random(seed)
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]
    for v in range(4, nv):
        x, y, z = faces.pop(rng.randrange(len(faces)))
        faces += [(x, y, v), (y, z, v), (z, x, v)]

    def edge_set():
        return {frozenset((f[k], f[(k + 1) % 3])) for f in faces for k in range(3)}

    for _ in range(flips):
        f1 = rng.randrange(len(faces))
        k = rng.randrange(3)
        a, b, c = (faces[f1][(k + t) % 3] for t in range(3))
        f2 = next(
            idx
            for idx, f in enumerate(faces)
            if any((f[t], f[(t + 1) % 3]) == (b, a) for t in range(3))
        )
        d = next(x for x in faces[f2] if x not in (a, b))
        if frozenset((c, d)) in edge_set():
            continue
        for idx in sorted((f1, f2), reverse=True):
            faces.pop(idx)
        faces += [(c, a, d), (d, b, c)]
    return Graph.from_edges(tuple(e) for e in edge_set())


def random_polyhedron(nv: int, seed: int, removals: int = 4) -> Graph:
    """Random triangulation with edges deleted while staying 3-connected."""
    rng = random.Random(seed)
    g = random_triangulation(nv, seed)
    edges = list(g.edges)
    rng.shuffle(edges)
    removed = 0
    for e in edges:
        if removed >= removals:
            break
        trial = Graph(g.vertices, tuple(x for x in g.edges if x != e))
        if connectivity_level(trial) == 3:
            g = trial
            removed += 1
    return g


def random_relabel(g: Graph, seed: int, prefix: str = "v") -> dict:
    """Random bijection from ``g``'s vertices to fresh string tokens."""
    rng = random.Random(seed)
    names = [f"{prefix}{k}" for k in range(g.num_vertices)]
    rng.shuffle(names)
    return dict(zip(g.vertices, names))


def planar3_pool() -> list:
    """Named planar 3-connected graphs with 4 to 8 vertices."""
    pool = [
        ("K4", complete(4)),
        ("W4", wheel(4)),
        ("W5", wheel(5)),
        ("W6", wheel(6)),
        ("W7", wheel(7)),
        ("prism3", prism(3)),
        ("cube", cube()),
        ("bipyramid3", bipyramid(3)),
        ("octahedron", bipyramid(4)),
        ("bipyramid5", bipyramid(5)),
        ("bipyramid6", bipyramid(6)),
        ("tri6", random_triangulation(6, seed=1)),
        ("tri7", random_triangulation(7, seed=2)),
        ("tri8a", random_triangulation(8, seed=3)),
        ("tri8b", random_triangulation(8, seed=5)),
        ("poly7", random_polyhedron(7, seed=5)),
        ("poly8", random_polyhedron(8, seed=6)),
    ]
    relabeled = []
    for name, seed in (("cube", 11), ("W5", 12), ("tri8a", 13)):
        g = dict(pool)[name]
        relabeled.append((f"{name}~", g.relabel(random_relabel(g, seed))))
    return pool + relabeled
