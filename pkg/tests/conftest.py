import random

import pytest

from rotcanon.graph import Dart, Graph, OrientedGraph, RotationScheme

# Edge list L of the worked W4 example, as printed.
WORKED_L = (
    ("s", "t"), ("t", "v3"), ("v3", "v2"), ("v3", "v1"), ("v3", "t"), ("t", "v1"),
    ("t", "s"), ("s", "v1"), ("v1", "t"), ("v1", "v3"), ("v1", "v2"), ("v1", "s"),
    ("s", "v2"), ("v2", "v1"), ("v2", "v3"), ("v2", "s"),
)

WORKED_CODE = (
    (1, 2), (2, 3), (3, 4), (3, 5), (3, 2), (2, 5), (2, 1), (1, 5),
    (5, 2), (5, 3), (5, 4), (5, 1), (1, 4), (4, 5), (4, 3), (4, 1),
)

# The only rotation of this W4 whose traversal from (s, t) reproduces L;
# found by enumerating every rotation scheme and checking each against L.
WORKED_FANS = {
    "s": ["t", "v1", "v2"],
    "t": ["s", "v3", "v1"],
    "v1": ["s", "t", "v3", "v2"],
    "v2": ["s", "v1", "v3"],
    "v3": ["t", "v2", "v1"],
}

WORKED_TREE = {Dart("s", "t"), Dart("s", "v1"), Dart("s", "v2"), Dart("t", "v3")}


@pytest.fixture
def worked_w4() -> OrientedGraph:
    return OrientedGraph.from_fans(WORKED_FANS)


@pytest.fixture
def k3() -> Graph:
    return Graph.from_edges([("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_bijection(vertices, rng, prefix="x"):
    names = [f"{prefix}{k}" for k in range(len(vertices))]
    rng.shuffle(names)
    return dict(zip(vertices, names))


def random_rotation(g: Graph, rng) -> RotationScheme:
    fans = {}
    for v in g.vertices:
        nb = list(g.neighbors(v))
        rng.shuffle(nb)
        if nb:
            fans[v] = nb
    return RotationScheme.from_fans(fans)
