import itertools

import networkx as nx
import pytest

from conftest import random_rotation
from rotcanon.errors import DisconnectedGraphError, GraphDomainError, SizeGuardError
from rotcanon.families import complete, cube, cycle, path, prism, random_triangulation, star, wheel
from rotcanon.graph import (
    Dart,
    Graph,
    OrientedGraph,
    RotationScheme,
    all_rotation_schemes,
    bfs_distances,
    connectivity_level,
    enumerate_planar_rotations,
    euler_face_target,
    find_planar_rotation,
    invert_rotation,
    is_planar_rotation,
    trace_faces,
)


def _rot_key(r: RotationScheme):
    return tuple((v, tuple(f)) for v, f in r.fans)


# -- Graph -----------------------------------------------------------------------


def test_graph_rejects_malformed_input():
    with pytest.raises(GraphDomainError):
        Graph.from_edges([("a", "a")])
    with pytest.raises(GraphDomainError):
        Graph.from_edges([("a", "b"), ("b", "a")])
    with pytest.raises(GraphDomainError):
        Graph(("a",), (("a", "z"),))
    with pytest.raises(GraphDomainError):
        Graph((), ())


def test_graph_basic_queries(k3):
    assert k3.num_vertices == 3 and k3.num_edges == 3
    assert k3.neighbors("a") == ("b", "c")
    assert k3.has_edge("c", "a") and not k3.has_edge("a", "a")
    assert len(k3.darts()) == 6
    assert {d.reverse() for d in k3.darts()} == set(k3.darts())
    for k in range(6):
        assert k3.dart_id(k3.dart_from_id(k)) == k
        assert k3.dart_from_id(k ^ 1) == k3.dart_from_id(k).reverse()


def test_components_and_relabel():
    g = Graph.from_edges([(1, 2), (3, 4)], [5])
    assert sorted(map(sorted, g.components())) == [[1, 2], [3, 4], [5]]
    assert not g.is_connected()
    h = g.relabel({1: "a", 2: "b", 3: "c", 4: "d", 5: "e"})
    assert h.has_edge("a", "b") and h.has_edge("c", "d") and h.degree("e") == 0


# -- distances ---------------------------------------------------------------------


def test_bfs_examples(k3):
    assert dict(bfs_distances(k3, "a").dist) == {"a": 0, "b": 1, "c": 1}
    p = Graph.from_edges([("a", "b"), ("b", "c")])
    assert dict(bfs_distances(p, "a").dist) == {"a": 0, "b": 1, "c": 2}
    two = Graph(("a", "b"), ())
    table = bfs_distances(two, "a")
    assert table["a"] == 0 and table["b"] is None and not table.reachable("b")
    with pytest.raises(GraphDomainError):
        bfs_distances(k3, "z")


def _exhaustive_distance(g: Graph, s, t):
    # shortest simple path length by enumerating paths of growing hop count
    if s == t:
        return 0
    frontier = [(s,)]
    for hops in range(1, g.num_vertices):
        nxt = []
        for p in frontier:
            for u in g.neighbors(p[-1]):
                if u in p:
                    continue
                if u == t:
                    return hops
                nxt.append(p + (u,))
        frontier = nxt
    return None


def test_bfs_matches_exhaustive_paths(rng):
    for _ in range(40):
        n = rng.randint(1, 8)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.35]
        g = Graph.from_edges(edges, range(n))
        for s in g.vertices:
            table = bfs_distances(g, s)
            for t in g.vertices:
                assert table[t] == _exhaustive_distance(g, s, t)
                if table[t] is not None:
                    for u in g.neighbors(t):
                        assert abs(table[u] - table[t]) <= 1


# -- connectivity --------------------------------------------------------------------


def test_connectivity_examples():
    assert connectivity_level(complete(4)) == 3
    assert connectivity_level(cycle(4)) == 2
    assert connectivity_level(path(3)) == 1
    assert connectivity_level(Graph(("a", "b"), ())) == 0
    assert connectivity_level(Graph(("a",), ())) == 0
    for n in range(4, 8):
        assert connectivity_level(complete(n)) == 3
    assert connectivity_level(star(5)) == 1


def test_connectivity_matches_networkx(rng):
    for _ in range(60):
        n = rng.randint(2, 9)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.55]
        g = Graph.from_edges(edges, range(n))
        ng = nx.Graph(list(g.edges))
        ng.add_nodes_from(g.vertices)
        if not nx.is_connected(ng):
            expected = 0
        elif nx.is_isomorphic(ng, nx.complete_graph(n)):
            expected = min(3, n - 1)
        else:
            expected = min(3, nx.node_connectivity(ng))
        assert connectivity_level(g) == expected


# -- rotations -------------------------------------------------------------------------


def test_rotation_validity_and_successor():
    r = RotationScheme.from_fans({"s": ["a", "b", "c"]})
    assert r.successor(("s", "a")) == Dart("s", "b")
    assert r.successor(("s", "c")) == Dart("s", "a")
    for d in r.darts():
        orbit = [d]
        while True:
            nxt = r.successor(orbit[-1])
            if nxt == d:
                break
            orbit.append(nxt)
        assert len(orbit) == 3 == len(set(orbit))
    with pytest.raises(GraphDomainError):
        RotationScheme.from_fans({"s": ["a", "a"]})
    with pytest.raises(GraphDomainError):
        RotationScheme.from_successors({("s", "a"): ("s", "a"), ("s", "b"): ("s", "b")})


def test_rotation_equality_ignores_start_of_cycle():
    assert RotationScheme.from_fans({"s": "abc"}) == RotationScheme.from_fans({"s": "bca"})
    assert RotationScheme.from_fans({"s": "abc"}) != RotationScheme.from_fans({"s": "acb"})


def test_invert_rotation_examples(k3):
    leaf = RotationScheme.from_fans({"a": ["b"]})
    assert invert_rotation(leaf) == leaf
    r = RotationScheme.from_fans({"s": ["a", "b", "c"]})
    inv = invert_rotation(r)
    assert inv.successor(("s", "a")) == Dart("s", "c")
    assert inv.successor(("s", "c")) == Dart("s", "b")
    k3r = RotationScheme.from_fans({v: list(k3.neighbors(v)) for v in k3.vertices})
    assert invert_rotation(k3r) == k3r


def test_invert_is_involution_and_inverts_successor(rng):
    g = random_triangulation(9, seed=3)
    for _ in range(10):
        r = random_rotation(g, rng)
        inv = invert_rotation(r)
        assert invert_rotation(inv) == r
        for d in g.darts():
            assert inv.successor(r.successor(d)) == d


def test_oriented_graph_rejects_mismatched_fans(k3):
    with pytest.raises(GraphDomainError):
        OrientedGraph(k3, RotationScheme.from_fans({"a": ["b"], "b": ["a", "c"], "c": ["a", "b"]}))
    with pytest.raises(GraphDomainError):
        OrientedGraph(k3, RotationScheme.from_fans({"a": ["b", "c"], "b": ["a", "c"]}))


# -- faces and planarity ---------------------------------------------------------------


def test_face_examples(k3):
    ok3 = OrientedGraph(k3, find_planar_rotation(k3))
    faces = trace_faces(ok3)
    assert sorted(len(f) for f in faces) == [3, 3]
    k4 = OrientedGraph(complete(4), find_planar_rotation(complete(4)))
    assert sorted(len(f) for f in trace_faces(k4)) == [3] * 4
    q3 = OrientedGraph(cube(), find_planar_rotation(cube()))
    assert sorted(len(f) for f in trace_faces(q3)) == [4] * 6


def test_faces_partition_darts_and_euler_dichotomy(rng):
    for g in (complete(4), wheel(5), prism(4), random_triangulation(7, 2), cycle(5)):
        for _ in range(15):
            og = OrientedGraph(g, random_rotation(g, rng))
            faces = trace_faces(og)
            flat = [d for f in faces for d in f]
            assert len(flat) == 2 * g.num_edges == len(set(flat))
            assert is_planar_rotation(og) == (len(faces) == euler_face_target(g))


def test_planarity_examples(k3):
    assert is_planar_rotation(OrientedGraph(k3, find_planar_rotation(k3)))
    k5 = complete(5)
    assert not any(is_planar_rotation(OrientedGraph(k5, r)) for r in all_rotation_schemes(k5))
    k4 = complete(4)
    rho = find_planar_rotation(k4)
    fans = rho.as_dict()
    fans[0] = [fans[0][0], fans[0][2], fans[0][1]]
    assert not is_planar_rotation(OrientedGraph(k4, RotationScheme.from_fans(fans)))
    with pytest.raises(DisconnectedGraphError):
        is_planar_rotation(OrientedGraph.from_fans({1: [2], 2: [1], 3: [4], 4: [3]}))


def test_enumeration_examples(k3):
    assert len(enumerate_planar_rotations(k3)) == 1
    for g in (complete(4), wheel(4)):
        rs = enumerate_planar_rotations(g)
        assert len(rs) == 2
        assert invert_rotation(rs[0]) == rs[1]


def _brute_planar(g):
    return {
        _rot_key(r) for r in all_rotation_schemes(g) if is_planar_rotation(OrientedGraph(g, r))
    }


@pytest.mark.parametrize(
    "g",
    [
        complete(4),
        wheel(5),
        prism(3),
        cycle(5),
        path(4),
        star(4),
        complete(5),
        Graph.from_edges([(a, b) for a in "abc" for b in "xyz"]),
        Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
        Graph.from_edges([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]),
        Graph.from_edges([(0, 1), (1, 2), (2, 0), (2, 3)]),
        Graph.from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1), (1, 4), (2, 4)]),
        path(2),
    ],
    ids=lambda g: f"V{g.num_vertices}E{g.num_edges}",
)
def test_enumeration_matches_unpruned_search(g):
    got = [_rot_key(r) for r in enumerate_planar_rotations(g)]
    assert len(got) == len(set(got))
    assert set(got) == _brute_planar(g)


def test_enumeration_size_guard():
    with pytest.raises(SizeGuardError):
        enumerate_planar_rotations(random_triangulation(12, seed=1), budget=3)


def test_enumeration_finds_mirror_pair_on_larger_polyhedra():
    for seed in range(5):
        g = random_triangulation(25, seed)
        rs = enumerate_planar_rotations(g)
        assert len(rs) == 2 and invert_rotation(rs[0]) == rs[1]


def test_single_vertex_and_edge_are_accepted():
    one = Graph(("a",), ())
    assert connectivity_level(one) == 0
    assert enumerate_planar_rotations(one) == [RotationScheme(())]
    edge = path(2)
    assert is_planar_rotation(OrientedGraph(edge, find_planar_rotation(edge)))
