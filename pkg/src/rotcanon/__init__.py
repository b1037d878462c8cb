"""Canonical codes for graphs with rotation schemes.

Decides isomorphism of planar 3-connected graphs and of oriented graphs,
checks the isolating grid-graph weights, and generates labelled instance
pairs for isomorphism testing.
"""

from .canon import (
    Isomorphism,
    SpanningTree,
    canonical_edge_list,
    canonical_form_planar3,
    canonical_spanning_tree,
    code,
    is_isomorphic_oriented,
    is_isomorphic_planar3,
    oriented_canonical_form,
    rename,
)
from .errors import (
    ConstructionError,
    DisconnectedGraphError,
    GraphDomainError,
    InvariantError,
    ParseError,
    PreconditionError,
    RotcanonError,
    SizeGuardError,
)
from .fileformat import parse_graph_file, serialize_graph, to_dot
from .gadgets import (
    GadgetPair,
    OrdInstance,
    brute_force_iso,
    brute_force_oriented_iso,
    build_oriented_trees,
    build_planar3,
    build_trees,
)
from .graph import (
    Dart,
    DistanceTable,
    Graph,
    OrientedGraph,
    RotationScheme,
    bfs_distances,
    connectivity_level,
    enumerate_planar_rotations,
    find_planar_rotation,
    invert_rotation,
    is_planar_rotation,
)
from .grid import (
    GridEdge,
    GridGraph,
    PathWeight,
    count_min_weight_paths,
    inductive_count,
    marked_distance,
    min_weight_path,
    verify_unique_min_weight,
    weight_w,
    weight_w0,
)
from .kernels import BACKEND

__version__ = "0.1.0"
