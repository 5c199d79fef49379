"""Immutable graph core: validated simple connected graphs, BFS distances,
edge/vertex distance, edge contraction, and the edge-list file format.

Vertices are dense integer ids ``0..n-1`` so that distance matrices and
subset enumeration can index directly. Edges are stored canonically with
the smaller endpoint first, sorted lexicographically.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path


class GraphError(ValueError):
    """An edge list does not describe a valid simple connected graph."""


class EdgeListParseError(ValueError):
    """An edge-list file is malformed. Carries the offending line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple connected undirected graph on vertices ``0..n-1``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return v in self.adjacency[u]


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts; ``d[u][v]`` is the shortest-path length."""

    d: tuple[tuple[int, ...], ...]

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.d[u]


def build_graph(n: int, edges) -> Graph:
    """Validate and canonicalize an edge list into a :class:`Graph`.

    Rejects loops, duplicate edges, out-of-range ids and disconnected
    graphs, each with a distinct message.
    """
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphError(f"vertex id out of range [0, {n}): edge ({u}, {v})")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        e = normalize_edge(u, v)
        if e in seen:
            raise GraphError(f"duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)
    canonical = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in canonical:
        adj[u].append(v)
        adj[v].append(u)
    adjacency = tuple(tuple(sorted(neigh)) for neigh in adj)

    # connectivity from vertex 0
    reached = [False] * n
    reached[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if not reached[w]:
                reached[w] = True
                count += 1
                queue.append(w)
    if count != n:
        raise GraphError("graph is disconnected")

    return Graph(n=n, edges=canonical, adjacency=adjacency)


def _bfs_row(g: Graph, source: int) -> tuple[int, ...]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return tuple(dist)


@lru_cache(maxsize=None)
def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Exact unweighted shortest-path distances, one BFS per vertex.

    Cached per graph: every downstream operation is distance-bound and
    the matrix is immutable.
    """
    return DistanceMatrix(d=tuple(_bfs_row(g, s) for s in range(g.n)))


def edge_vertex_distance(g: Graph, e: tuple[int, int], s: int, dm: DistanceMatrix | None = None) -> int:
    """Distance from edge ``e = uv`` to vertex ``s``: min of the endpoint distances."""
    u, v = normalize_edge(*e)
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge of the graph")
    if dm is None:
        dm = all_pairs_distances(g)
    return min(dm[u][s], dm[v][s])


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Contract edge ``e``, merging its endpoints into the smaller id.

    Resulting loops are dropped and parallel edges merged; remaining ids
    are re-canonicalized to ``0..n-2`` preserving relative order.
    """
    u, v = normalize_edge(*e)
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge of the graph")

    def remap(w: int) -> int:
        if w == v:
            w = u
        return w - 1 if w > v else w

    new_edges = set()
    for a, b in g.edges:
        if (a, b) == (u, v):
            continue
        na, nb = remap(a), remap(b)
        if na != nb:
            new_edges.add(normalize_edge(na, nb))
    return build_graph(g.n - 1, sorted(new_edges))


def parse_edge_list(text: str) -> Graph:
    """Parse the canonical on-disk format: header line ``n m``, then ``m``
    lines ``u v``. ``#`` starts a comment; blank lines are skipped."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"expected two integers, got {raw!r}", line_no)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"expected two integers, got {raw!r}", line_no) from None
        if header is None:
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise EdgeListParseError("missing 'n m' header line", 1)
    n, m = header
    if len(edges) != m:
        raise EdgeListParseError(f"header declares {m} edges, found {len(edges)}", 1)
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load_graph(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def save_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g))
