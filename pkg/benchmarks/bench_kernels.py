"""Time the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Each workload calls the kernel module directly with identical inputs, checks
that both backends agree, and reports the best-of-N wall time.
"""

import argparse
import random
import sys
import timeit

from rotcanon import kernels
from rotcanon.families import random_polyhedron, random_triangulation
from rotcanon.graph import OrientedGraph, _csr, _search_fans, euler_face_target, find_planar_rotation
from rotcanon.kernels import _pykernels


def _random_rotations(g, count, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        fans = {}
        for v in g.vertices:
            nb = list(g.neighbors(v))
            rng.shuffle(nb)
            fans[v] = nb
        out.append(OrientedGraph.from_fans(fans)._rot_array)
    return out


def workloads():
    tri = random_triangulation(40, seed=1)
    poly = random_polyhedron(30, seed=2)
    og = OrientedGraph(tri, find_planar_rotation(tri))
    tail, head, _ = tri._dart_tables
    rots = _random_rotations(tri, 200, seed=3)
    offsets, nbrs = _csr(poly)
    fans = _search_fans(tri)
    m2 = 2 * tri.num_edges

    def faces(mod):
        return [mod.count_faces(r) for r in rots]

    def walks(mod):
        return [
            list(mod.code_walk(d, og._rot_array, tail, head, tri._dist, tri.num_vertices, None, kernels.CMP_NONE)[0])
            for d in range(m2)
        ]

    def connectivity(mod):
        return mod.connectivity_level(poly.num_vertices, offsets, nbrs)

    def search(mod):
        res, _ = mod.planar_rotations(fans, m2, euler_face_target(tri), 10, 5_000_000, kernels.FACES_INDUCED)
        return sorted(map(list, res))

    return [
        ("count_faces x200 (40 vertices)", faces),
        ("code_walk, all darts (40 vertices)", walks),
        ("connectivity_level (30 vertices)", connectivity),
        ("planar_rotations (40 vertices)", search),
    ]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    compiled = kernels.load_compiled()
    if compiled is None:
        print("compiled kernels are not built; run: python3 setup.py build_ext --inplace")
        return 1

    print(f"{'workload':40} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, fn in workloads():
        if fn(_pykernels) != fn(compiled):
            print(f"{name}: backends disagree")
            return 1
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        c = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat))
        print(f"{name:40} {py:10.4f} {c:11.4f} {py / c:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
