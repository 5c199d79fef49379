"""Structural analysis of unicyclic and cactus graphs.

Covers cycle extraction and cactus detection, thread decomposition with the
L(G) invariant, branch-active vertices per cycle, S-active vertices,
branch-resolving sets, geodesic triples on a cycle, and cycle domains.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graph import DistanceMatrix, Graph, all_pairs_distances, normalize_edge


class NotCactusError(ValueError):
    """Raised by operations that are only defined on cactus graphs."""


@dataclass(frozen=True, eq=False)
class CycleSet:
    """The cycles of a graph in canonical order.

    Cycles are the biconnected blocks that are simple cycles. For a cactus
    every non-bridge block is a cycle, so the list is complete and its
    length equals the cyclomatic number. Non-cactus graphs are flagged via
    ``is_cactus`` rather than rejected.
    """

    cycles: tuple[tuple[int, ...], ...]
    edge_to_cycle: dict[tuple[int, int], int]
    cyclomatic_number: int
    is_cactus: bool

    def cycle_vertices(self, i: int) -> frozenset[int]:
        return frozenset(self.cycles[i])

    def vertex_on_other_cycle(self, i: int) -> frozenset[int]:
        """Vertices lying on some cycle other than cycle ``i``."""
        out: set[int] = set()
        for j, cyc in enumerate(self.cycles):
            if j != i:
                out.update(cyc)
        return frozenset(out)


@dataclass(frozen=True, eq=False)
class ThreadDecomposition:
    """Threads per anchor, thread counts ell(v), and L = sum(ell(v) - 1)."""

    threads: tuple[tuple[int, tuple[int, ...]], ...]
    ell: dict[int, int]
    L: int
    branching_vertices: frozenset[int]


@dataclass(frozen=True, eq=False)
class CycleActivity:
    """Components of G - E(C_i) and the branch-active vertices of cycle i."""

    cycle_index: int
    component_of: dict[int, frozenset[int]]
    branch_active: tuple[int, ...]
    b: int


@dataclass(frozen=True, eq=False)
class Domain:
    """The unicyclic restriction of a cactus graph around one cycle."""

    cycle_index: int
    vertices: tuple[int, ...]
    boundary_vertices: tuple[int, ...]
    connectors: tuple[tuple[int, ...], ...]


def _biconnected_blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected components (iterative Hopcroft-Tarjan)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[list[tuple[int, int]]] = []

    disc[0] = low[0] = 0
    timer = 1
    stack: list[list[int]] = [[0, -1, 0]]  # vertex, parent, next adjacency index
    while stack:
        frame = stack[-1]
        v, p, i = frame
        if i < len(g.adjacency[v]):
            frame[2] += 1
            w = g.adjacency[v][i]
            if w == p:
                continue
            if disc[w] < 0:
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                stack.append([w, v, 0])
            elif disc[w] < disc[v]:
                edge_stack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    comp = []
                    while edge_stack[-1] != (u, v):
                        comp.append(edge_stack.pop())
                    comp.append(edge_stack.pop())
                    blocks.append(comp)
    return blocks


def _canonical_cycle(order: list[int]) -> tuple[int, ...]:
    # start at the minimum id and walk toward its smaller-id cycle neighbour
    g = len(order)
    i = order.index(min(order))
    nxt, prv = order[(i + 1) % g], order[(i - 1) % g]
    if nxt <= prv:
        return tuple(order[(i + k) % g] for k in range(g))
    return tuple(order[(i - k) % g] for k in range(g))


def _block_as_cycle(block: list[tuple[int, int]]) -> tuple[int, ...] | None:
    """Cyclic vertex order of the block if it is a simple cycle, else None."""
    adj: dict[int, list[int]] = {}
    for u, v in block:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if len(block) != len(adj) or any(len(ns) != 2 for ns in adj.values()):
        return None
    start = next(iter(adj))
    order = [start]
    prev, cur = None, start
    for _ in range(len(adj) - 1):
        a, b = adj[cur]
        nxt = b if a == prev else a
        order.append(nxt)
        prev, cur = cur, nxt
    return _canonical_cycle(order)


@lru_cache(maxsize=None)
def find_cycles(g: Graph) -> CycleSet:
    """Extract all cycles of a cactus graph and validate the cactus property.

    Blocks that are neither bridges nor simple cycles mark the graph as
    non-cactus; such blocks contribute no listed cycle (only the cyclomatic
    number is meaningful for them).
    """
    cyclomatic = g.m - g.n + 1
    cycles: list[tuple[int, ...]] = []
    is_cactus = True
    for block in _biconnected_blocks(g):
        if len(block) == 1:
            continue
        cyc = _block_as_cycle(block)
        if cyc is None:
            is_cactus = False
        else:
            cycles.append(cyc)
    cycles.sort()
    edge_to_cycle: dict[tuple[int, int], int] = {}
    for idx, cyc in enumerate(cycles):
        k = len(cyc)
        for t in range(k):
            edge_to_cycle[normalize_edge(cyc[t], cyc[(t + 1) % k])] = idx
    return CycleSet(
        cycles=tuple(cycles),
        edge_to_cycle=edge_to_cycle,
        cyclomatic_number=cyclomatic,
        is_cactus=is_cactus,
    )


def _walk_thread(g: Graph, anchor: int, first: int) -> tuple[int, ...] | None:
    """Follow degree-2 vertices from ``first`` away from ``anchor``; a thread
    ends at a leaf, anything else (another high-degree vertex) is not one."""
    path = [first]
    prev, cur = anchor, first
    while g.degree(cur) == 2:
        a, b = g.adjacency[cur]
        nxt = b if a == prev else a
        if g.degree(nxt) >= 3:
            return None
        path.append(nxt)
        prev, cur = cur, nxt
    return tuple(path) if g.degree(cur) == 1 else None


@lru_cache(maxsize=None)
def decompose_threads(g: Graph) -> ThreadDecomposition:
    """All threads of the graph, anchored at vertices of degree >= 3.

    A thread is a pendant path whose interior vertices have degree 2 and
    whose last vertex is a leaf. Paths and K1 have no threads and L = 0.
    """
    threads: list[tuple[int, tuple[int, ...]]] = []
    ell: dict[int, int] = {}
    for v in range(g.n):
        if g.degree(v) < 3:
            continue
        for u in g.adjacency[v]:
            if g.degree(u) > 2:
                continue
            path = _walk_thread(g, v, u)
            if path is not None:
                threads.append((v, path))
                ell[v] = ell.get(v, 0) + 1
    L = sum(k - 1 for k in ell.values() if k > 1)

    cs = find_cycles(g)
    on_cycle: set[int] = set()
    for cyc in cs.cycles:
        on_cycle.update(cyc)
    branching = frozenset(
        v
        for v in range(g.n)
        if (v not in on_cycle and g.degree(v) >= 3) or (v in on_cycle and g.degree(v) >= 4)
    )
    return ThreadDecomposition(
        threads=tuple(threads), ell=ell, L=L, branching_vertices=branching
    )


def _components_without_cycle(g: Graph, cycle_edges: set[tuple[int, int]]) -> list[int]:
    comp = [-1] * g.n
    cid = 0
    for start in range(g.n):
        if comp[start] >= 0:
            continue
        comp[start] = cid
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if comp[w] < 0 and normalize_edge(u, w) not in cycle_edges:
                    comp[w] = cid
                    queue.append(w)
        cid += 1
    return comp


@lru_cache(maxsize=None)
def _cycle_activity_cached(g: Graph, i: int) -> CycleActivity:
    cs = find_cycles(g)
    cycle = cs.cycles[i]
    k = len(cycle)
    cycle_edges = {normalize_edge(cycle[t], cycle[(t + 1) % k]) for t in range(k)}
    comp = _components_without_cycle(g, cycle_edges)
    members: dict[int, set[int]] = {}
    for v in range(g.n):
        members.setdefault(comp[v], set()).add(v)
    component_of = {v: frozenset(members[comp[v]]) for v in cycle}

    cyc_set = set(cycle)
    def branching(w: int) -> bool:
        if w in cyc_set:
            return g.degree(w) >= 4
        return g.degree(w) >= 3

    branch_active = tuple(
        v for v in cycle if any(branching(w) for w in component_of[v])
    )
    return CycleActivity(
        cycle_index=i,
        component_of=component_of,
        branch_active=branch_active,
        b=len(branch_active),
    )


def cycle_activity(g: Graph, cs: CycleSet, i: int) -> CycleActivity:
    """Components T_v of G - E(C_i) and the branch-active vertices of C_i.

    A vertex w is branching with respect to C_i when it is off the cycle
    with degree >= 3, or on the cycle with degree >= 4; v on C_i is
    branch-active when T_v contains a branching vertex.
    """
    if not cs.is_cactus:
        raise NotCactusError("cycle activity is only defined on cactus graphs")
    if not (0 <= i < len(cs.cycles)):
        raise ValueError(f"no cycle with index {i}")
    return _cycle_activity_cached(g, i)


def s_active_vertices(g: Graph, ca: CycleActivity, S) -> tuple[int, ...]:
    """Cycle vertices whose component T_v contains a vertex of S."""
    s = set(S)
    return tuple(v for v in sorted(ca.component_of) if ca.component_of[v] & s)


def is_branch_resolving(g: Graph, S) -> bool:
    """True when at every vertex of degree >= 3 at most one of its threads
    misses S."""
    td = decompose_threads(g)
    s = set(S)
    uncovered: dict[int, int] = {}
    for anchor, path in td.threads:
        if not s.intersection(path):
            uncovered[anchor] = uncovered.get(anchor, 0) + 1
            if uncovered[anchor] > 1:
                return False
    return True


def is_geodesic_triple(
    cs: CycleSet, i: int, dm: DistanceMatrix, vi: int, vj: int, vk: int
) -> bool:
    """True when the three pairwise distances sum to the cycle length.

    Vertices must lie on cycle ``i`` and be pairwise distinct.
    """
    cyc = cs.cycle_vertices(i)
    for v in (vi, vj, vk):
        if v not in cyc:
            raise ValueError(f"vertex {v} is not on cycle {i}")
    if len({vi, vj, vk}) < 3:
        return False
    return dm[vi][vj] + dm[vj][vk] + dm[vi][vk] == len(cyc)


def complete_to_geodesic_triple(
    cs: CycleSet, i: int, dm: DistanceMatrix, anchors
) -> int | None:
    """Smallest-id cycle vertex that forms a geodesic triple with some pair
    of anchors, or None when the anchors already contain one."""
    anchor_list = sorted(set(anchors))
    cyc = cs.cycle_vertices(i)
    if len(anchor_list) < 2:
        raise ValueError("need at least two distinct anchors")
    for v in anchor_list:
        if v not in cyc:
            raise ValueError(f"anchor {v} is not on cycle {i}")
    for a, b, c in combinations(anchor_list, 3):
        if is_geodesic_triple(cs, i, dm, a, b, c):
            return None
    for x in sorted(cyc):
        for a, b in combinations(anchor_list, 2):
            if x in (a, b):
                continue
            if is_geodesic_triple(cs, i, dm, a, b, x):
                return x
    raise RuntimeError("no completion vertex exists; cycle data is inconsistent")


def _pendant_tree_vertices(g: Graph, cs: CycleSet) -> set[int]:
    """Vertices of threads and branches: pendant acyclic parts, found by
    repeatedly pruning off-cycle leaves. Connector interiors keep degree 2
    and survive; cycle vertices are never pruned."""
    on_cycle: set[int] = set()
    for cyc in cs.cycles:
        on_cycle.update(cyc)
    degree = [g.degree(v) for v in range(g.n)]
    pruned: set[int] = set()
    queue = deque(
        v for v in range(g.n) if degree[v] == 1 and v not in on_cycle
    )
    while queue:
        v = queue.popleft()
        pruned.add(v)
        for w in g.adjacency[v]:
            if w in pruned:
                continue
            degree[w] -= 1
            if degree[w] == 1 and w not in on_cycle:
                queue.append(w)
    return pruned


def domains(g: Graph, cs: CycleSet) -> list[Domain]:
    """One domain per cycle: the cycle, its incident connector paths up to
    their boundary vertices on other cycles, and the threads and branches
    hanging anywhere along the way."""
    if not cs.is_cactus:
        raise NotCactusError("domains are only defined on cactus graphs")
    if not cs.cycles:
        raise ValueError("graph has no cycles")
    pendant = _pendant_tree_vertices(g, cs)
    cycle_edges = set(cs.edge_to_cycle)
    out: list[Domain] = []
    for i, cycle in enumerate(cs.cycles):
        other = cs.vertex_on_other_cycle(i)
        # core walk over connector edges only, stopping at other cycles
        parent: dict[int, int | None] = {v: None for v in cycle}
        queue = deque(cycle)
        reached = set(cycle)
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w in reached or w in pendant:
                    continue
                if normalize_edge(u, w) in cycle_edges:
                    continue
                reached.add(w)
                parent[w] = u
                if w not in other:
                    queue.append(w)
        boundary = sorted(reached & other)
        # re-attach the pendant trees hanging at collected vertices
        tree_queue = deque(reached)
        while tree_queue:
            u = tree_queue.popleft()
            for w in g.adjacency[u]:
                if w in pendant and w not in reached:
                    reached.add(w)
                    tree_queue.append(w)
        connectors: list[tuple[int, ...]] = []
        cyc_set = set(cycle)
        for b in boundary:
            path = [b]
            cur = b
            while cur not in cyc_set:
                cur = parent[cur]  # type: ignore[assignment]
                path.append(cur)
            connectors.append(tuple(reversed(path)))
        out.append(
            Domain(
                cycle_index=i,
                vertices=tuple(sorted(reached)),
                boundary_vertices=tuple(boundary),
                connectors=tuple(connectors),
            )
        )
    return out


def structural_report(g: Graph) -> dict:
    """JSON-ready structural summary with the fixed field names."""
    cs = find_cycles(g)
    td = decompose_threads(g)
    report = {
        "cycles": [list(c) for c in cs.cycles],
        "cyclomatic": cs.cyclomatic_number,
        "is_cactus": cs.is_cactus,
        "L": td.L,
        "ell": {str(v): k for v, k in sorted(td.ell.items())},
        "threads": [
            {"anchor": anchor, "vertices": list(path)} for anchor, path in td.threads
        ],
        "per_cycle": [],
        "domains": [],
    }
    if cs.is_cactus:
        for i in range(len(cs.cycles)):
            ca = cycle_activity(g, cs, i)
            report["per_cycle"].append(
                {"b": ca.b, "branch_active": list(ca.branch_active)}
            )
        if cs.cycles:
            report["domains"] = [
                {
                    "cycle": d.cycle_index,
                    "vertices": list(d.vertices),
                    "boundary_vertices": list(d.boundary_vertices),
                    "connectors": [list(p) for p in d.connectors],
                }
                for d in domains(g, cs)
            ]
    return report
