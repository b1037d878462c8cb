"""Directed grid graphs with position-dependent weights.

Edge weights follow the isolating scheme for grid graphs: every edge costs
``n**4``, a north edge in column ``i`` costs ``i`` more and a south edge ``i``
less, and marked edges cost an extra ``n**8``. Minimum-weight paths are then
unique, minimise the number of marked edges first and the number of edges
second. This module computes those weights and checks the consequences
exhaustively on small grids.

Rows grow southward: a north edge goes from ``(r, c)`` to ``(r - 1, c)``.
Columns are 0-based from the west.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Callable, NamedTuple, Union

from .errors import GraphDomainError, InvariantError, SizeGuardError

Point = tuple

DEFAULT_PATH_GUARD = 20


class GridEdge(NamedTuple):
    tail: Point
    head: Point
    marked: bool = False


@dataclass(frozen=True)
class PathWeight:
    """Weight ``a + b*n**4 + marked_count*n**8`` of a path.

    ``a`` is signed: south edges contribute negative column offsets.
    """

    a: int
    b: int
    marked_count: int
    n: int

    @property
    def total(self) -> int:
        n4 = self.n**4
        return self.a + self.b * n4 + self.marked_count * n4 * n4

    @classmethod
    def of_path(cls, edges, n: int, use_marked: bool = True) -> "PathWeight":
        a = b = m = 0
        for e in edges:
            b += 1
            a += _offset(e, n)
            if use_marked and e.marked:
                m += 1
        return cls(a, b, m, n)

    @classmethod
    def decompose(cls, total: int, n: int) -> "PathWeight":
        """Recover ``(a, b, marked_count)`` from a total using balanced digits.

        Exact whenever ``|a| < n**4 / 2`` and ``|a + b*n**4| < n**8 / 2``,
        which holds for simple paths in an ``n x n`` grid.
        """
        n4 = n**4
        n8 = n4 * n4
        m, rem = divmod(total + n8 // 2, n8)
        rem -= n8 // 2
        b, a = divmod(rem + n4 // 2, n4)
        a -= n4 // 2
        return cls(a, b, m, n)


def _direction(e: GridEdge) -> str:
    (r1, c1), (r2, c2) = e.tail, e.head
    dr, dc = r2 - r1, c2 - c1
    if (dr, dc) == (-1, 0):
        return "N"
    if (dr, dc) == (1, 0):
        return "S"
    if (dr, dc) == (0, 1):
        return "E"
    if (dr, dc) == (0, -1):
        return "W"
    raise GraphDomainError(f"{e.tail}->{e.head} is not a unit grid step")


def _offset(e: GridEdge, n: int) -> int:
    kind = _direction(e)
    if kind in "EW":
        return 0
    col = e.tail[1]
    if not 0 <= col < n:
        raise GraphDomainError(f"column {col} outside [0, {n})")
    return col if kind == "N" else -col


def weight_w0(e, n: int) -> int:
    """Unmarked weight: ``n**4`` plus the signed column offset of vertical edges."""
    e = GridEdge(*e)
    return n**4 + _offset(e, n)


def weight_w(e, n: int) -> int:
    """``weight_w0`` plus ``n**8`` for marked edges."""
    e = GridEdge(*e)
    extra = n**8 if e.marked else 0
    return weight_w0(e, n) + extra


WeightSpec = Union[str, Callable]


def _weight_fn(weight: WeightSpec) -> Callable:
    if weight == "w":
        return weight_w
    if weight == "w0":
        return weight_w0
    if callable(weight):
        return weight
    raise ValueError(f"unknown weight {weight!r}")


@dataclass(frozen=True)
class GridGraph:
    """Directed graph on the ``rows x cols`` lattice.

    ``n`` is the side parameter used by the weights; it defaults to
    ``max(rows, cols)`` and may not be smaller.
    """

    rows: int
    cols: int
    edges: tuple
    n: int = 0

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise GraphDomainError("grid dimensions must be positive")
        side = max(self.rows, self.cols)
        n = self.n or side
        if n < side:
            raise GraphDomainError(f"n={n} is smaller than the grid side {side}")
        seen = set()
        norm = []
        for e in self.edges:
            e = GridEdge(tuple(e[0]), tuple(e[1]), bool(e[2]) if len(e) > 2 else False)
            for r, c in (e.tail, e.head):
                if not (0 <= r < self.rows and 0 <= c < self.cols):
                    raise GraphDomainError(f"point {(r, c)} outside the grid")
            _direction(e)
            if (e.tail, e.head) in seen:
                raise GraphDomainError(f"duplicate edge {e.tail}->{e.head}")
            seen.add((e.tail, e.head))
            norm.append(e)
        norm.sort()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))

    def points(self) -> list:
        return [(r, c) for r in range(self.rows) for c in range(self.cols)]

    def out_edges(self, p) -> list:
        return [e for e in self.edges if e.tail == p]

    def _out(self) -> dict:
        adj = {p: [] for p in self.points()}
        for e in self.edges:
            adj[e.tail].append(e)
        return adj

    def with_marking(self, marked) -> "GridGraph":
        marked = {(tuple(p), tuple(q)) for p, q in marked}
        return GridGraph(
            self.rows,
            self.cols,
            tuple(GridEdge(e.tail, e.head, (e.tail, e.head) in marked) for e in self.edges),
            self.n,
        )


def full_grid(rows: int, cols: int, marked=(), n: int = 0) -> GridGraph:
    """All ``4*rows*cols - 2*rows - 2*cols`` unit-step darts of the lattice."""
    marked = {(tuple(p), tuple(q)) for p, q in marked}
    edges = []
    for r in range(rows):
        for c in range(cols):
            for dr, dc in ((-1, 0), (1, 0), (0, 1), (0, -1)):
                q = (r + dr, c + dc)
                if 0 <= q[0] < rows and 0 <= q[1] < cols:
                    edges.append(GridEdge((r, c), q, ((r, c), q) in marked))
    return GridGraph(rows, cols, tuple(edges), n)


def random_subgrid(
    rows: int, cols: int, seed: int, density: float = 0.7, mark_prob: float = 0.3
) -> GridGraph:
    """Random subset of the lattice darts with random markings (seeded)."""
    rng = random.Random(seed)
    edges = []
    for e in full_grid(rows, cols).edges:
        if rng.random() < density:
            edges.append(GridEdge(e.tail, e.head, rng.random() < mark_prob))
    return GridGraph(rows, cols, tuple(edges))


# -- shortest paths ------------------------------------------------------------


def _dijkstra(gg: GridGraph, s, wfn) -> tuple:
    adj = gg._out()
    dist = {s: 0}
    pred = {s: None}
    heap = [(0, s)]
    while heap:
        d, p = heapq.heappop(heap)
        if d > dist[p]:
            continue
        for e in adj[p]:
            nd = d + wfn(e, gg.n)
            if e.head not in dist or nd < dist[e.head]:
                dist[e.head] = nd
                pred[e.head] = e
                heapq.heappush(heap, (nd, e.head))
    return dist, pred


def _check_point(gg: GridGraph, p):
    p = tuple(p)
    if not (0 <= p[0] < gg.rows and 0 <= p[1] < gg.cols):
        raise GraphDomainError(f"point {p} outside the grid")
    return p


def min_weight_path(gg: GridGraph, s, t, use_marked: bool = True, weight: WeightSpec = None):
    """Minimum-weight ``s -> t`` path as ``(points, PathWeight)``, or ``None``.

    Weights are ``weight_w`` (``weight_w0`` when ``use_marked`` is False)
    unless ``weight`` overrides them.
    """
    s, t = _check_point(gg, s), _check_point(gg, t)
    wfn = _weight_fn(weight if weight is not None else ("w" if use_marked else "w0"))
    dist, pred = _dijkstra(gg, s, wfn)
    if t not in dist:
        return None
    edges = []
    p = t
    while pred[p] is not None:
        edges.append(pred[p])
        p = pred[p].tail
    edges.reverse()
    points = (s,) + tuple(e.head for e in edges)
    return points, PathWeight.of_path(edges, gg.n, use_marked)


def enumerate_simple_paths(gg: GridGraph, s, t, max_vertices: int = DEFAULT_PATH_GUARD) -> list:
    """Every simple directed ``s -> t`` path as a tuple of points."""
    if gg.rows * gg.cols > max_vertices:
        raise SizeGuardError(f"path enumeration limited to {max_vertices} grid points")
    s, t = _check_point(gg, s), _check_point(gg, t)
    adj = gg._out()
    out = []
    path = [s]
    on_path = {s}

    def dfs(p):
        if p == t:
            out.append(tuple(path))
            return
        for e in adj[p]:
            q = e.head
            if q in on_path:
                continue
            on_path.add(q)
            path.append(q)
            dfs(q)
            path.pop()
            on_path.discard(q)

    dfs(s)
    return out


def path_edges(gg: GridGraph, points) -> list:
    lookup = {(e.tail, e.head): e for e in gg.edges}
    return [lookup[(p, q)] for p, q in zip(points, points[1:])]


@dataclass(frozen=True)
class Certificate:
    """Two distinct simple paths witnessing a violated property."""

    kind: str  # "tied-minimum" or "decomposition"
    source: Point
    target: Point
    paths: tuple
    totals: tuple


@dataclass(frozen=True)
class UniquenessReport:
    ok: bool
    certificate: Certificate | None
    pairs_checked: int
    paths_checked: int
    # Distinct simple same-endpoint paths with equal totals, minimal or not.
    # Non-zero values are expected and do not affect ``ok``.
    equal_total_pairs: int

    def __bool__(self):
        return self.ok


def verify_unique_min_weight(
    gg: GridGraph, weight: WeightSpec = "w", max_vertices: int = DEFAULT_PATH_GUARD
) -> UniquenessReport:
    """Exhaustively check that every reachable ordered pair has one minimum path.

    For the built-in weights it also checks that equal totals imply equal
    ``(a, b, marked_count)`` decompositions. The first violation found is
    returned as a certificate.
    """
    if gg.rows * gg.cols > max_vertices:
        raise SizeGuardError(f"exhaustive verification limited to {max_vertices} grid points")
    wfn = _weight_fn(weight)
    structured = weight in ("w", "w0")
    use_marked = weight == "w"
    adj = gg._out()
    pairs = paths = equal_pairs = 0
    certificate = None

    for s in gg.points():
        # per target: best total, paths achieving it, total -> (decomposition, path)
        best = {}
        by_total = {}
        path = [s]
        on_path = {s}

        def dfs(p, total, a, b, m):
            nonlocal paths, equal_pairs, certificate
            for e in adj[p]:
                q = e.head
                if q in on_path:
                    continue
                nt = total + wfn(e, gg.n)
                na = a + (_offset(e, gg.n) if structured else 0)
                nm = m + (1 if use_marked and e.marked else 0)
                on_path.add(q)
                path.append(q)
                paths += 1
                here = tuple(path)
                cur = best.get(q)
                if cur is None or nt < cur[0]:
                    best[q] = (nt, [here])
                elif nt == cur[0]:
                    cur[1].append(here)
                seen = by_total.setdefault(q, {})
                prev = seen.get(nt)
                if prev is None:
                    seen[nt] = ((na, b + 1, nm), here, 1)
                else:
                    equal_pairs += prev[2]
                    seen[nt] = (prev[0], prev[1], prev[2] + 1)
                    if structured and prev[0] != (na, b + 1, nm) and certificate is None:
                        certificate = Certificate("decomposition", s, q, (prev[1], here), (nt, nt))
                dfs(q, nt, na, b + 1, nm)
                path.pop()
                on_path.discard(q)

        dfs(s, 0, 0, 0, 0)
        for q, (total, winners) in sorted(best.items()):
            pairs += 1
            if len(winners) > 1 and certificate is None:
                certificate = Certificate(
                    "tied-minimum", s, q, tuple(winners[:2]), (total, total)
                )
    return UniquenessReport(certificate is None, certificate, pairs, paths, equal_pairs)


def marked_distance(gg: GridGraph, s, t):
    """Marked edges on the minimum-``w`` path, or ``None`` if unreachable."""
    res = min_weight_path(gg, s, t, use_marked=True)
    return None if res is None else res[1].marked_count


def count_min_weight_paths(gg: GridGraph, s, weight: WeightSpec = "w") -> dict:
    """Number of minimum-weight ``s -> v`` paths for every grid point ``v``."""
    s = _check_point(gg, s)
    wfn = _weight_fn(weight)
    dist, _ = _dijkstra(gg, s, wfn)
    incoming = {}
    for e in gg.edges:
        incoming.setdefault(e.head, []).append(e)
    count = {p: 0 for p in gg.points()}
    count[s] = 1
    for v in sorted(dist, key=dist.get):
        if v == s:
            continue
        count[v] = sum(
            count[e.tail]
            for e in incoming.get(v, ())
            if e.tail in dist and dist[e.tail] + wfn(e, gg.n) == dist[v]
        )
    return count


def inductive_count(gg: GridGraph, s, weight: WeightSpec = "w", check_unique: bool = True) -> list:
    """Rows ``(k, c_k, D_k)`` for every realised distance ``k`` from ``s``.

    ``c_k`` counts the vertices within weighted distance ``k`` and ``D_k``
    sums their distances. Each stage is derived from the previous one only:
    the next budget is the cheapest extension of the known set, and the
    vertices reaching it join. Raises :class:`InvariantError` if some vertex
    has two minimum paths (when ``check_unique``) or if the final row
    disagrees with a direct shortest-path computation.
    """
    s = _check_point(gg, s)
    wfn = _weight_fn(weight)
    if check_unique:
        for v, c in count_min_weight_paths(gg, s, weight).items():
            if c > 1:
                raise InvariantError(f"vertex {v} has {c} minimum-weight paths from {s}")
    known = {s: 0}
    rows = [(0, 1, 0)]
    c_k, d_k = 1, 0
    while True:
        budget = None
        for e in gg.edges:
            if e.tail in known and e.head not in known:
                cand = known[e.tail] + wfn(e, gg.n)
                if budget is None or cand < budget:
                    budget = cand
        if budget is None:
            break
        joined = {
            e.head
            for e in gg.edges
            if e.tail in known and e.head not in known and known[e.tail] + wfn(e, gg.n) == budget
        }
        for v in joined:
            known[v] = budget
        c_k += len(joined)
        d_k += budget * len(joined)
        rows.append((budget, c_k, d_k))
    dist, _ = _dijkstra(gg, s, wfn)
    if (c_k, d_k) != (len(dist), sum(dist.values())):
        raise InvariantError("inductive count disagrees with direct shortest paths")
    return rows
