"""Exact metric and edge metric dimension by size-ascending subset search.

The generator predicates double as the ground-truth oracle for every
property test in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import DistanceMatrix, Graph, all_pairs_distances

DEFAULT_CAP = 20


class TooLargeError(ValueError):
    """The instance exceeds the configured exact-search size cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"graph has {n} vertices, exact search is capped at {cap}")
        self.n = n
        self.cap = cap


@dataclass(frozen=True)
class GeneratorReport:
    S: tuple[int, ...]
    is_vertex_generator: bool
    is_edge_generator: bool
    cardinality: int

    def as_dict(self) -> dict:
        return {
            "S": list(self.S),
            "is_vertex_generator": self.is_vertex_generator,
            "is_edge_generator": self.is_edge_generator,
            "cardinality": self.cardinality,
        }


def is_metric_generator(g: Graph, dm: DistanceMatrix, S) -> bool:
    """True iff the distance vectors to S are pairwise distinct over V(G)."""
    rows = [dm[s] for s in S]
    seen = set()
    for v in range(g.n):
        t = tuple(r[v] for r in rows)
        if t in seen:
            return False
        seen.add(t)
    return True


def is_edge_metric_generator(g: Graph, dm: DistanceMatrix, S) -> bool:
    """True iff the min-endpoint distance vectors to S are pairwise distinct
    over E(G)."""
    rows = [dm[s] for s in S]
    seen = set()
    for u, v in g.edges:
        t = tuple(min(r[u], r[v]) for r in rows)
        if t in seen:
            return False
        seen.add(t)
    return True


def evaluate_set(g: Graph, S) -> GeneratorReport:
    dm = all_pairs_distances(g)
    s = tuple(sorted(set(S)))
    return GeneratorReport(
        S=s,
        is_vertex_generator=is_metric_generator(g, dm, s),
        is_edge_generator=is_edge_metric_generator(g, dm, s),
        cardinality=len(s),
    )


def _minimum_generator(g: Graph, predicate, cap: int) -> tuple[int, tuple[int, ...]]:
    if g.n > cap:
        raise TooLargeError(g.n, cap)
    dm = all_pairs_distances(g)
    for k in range(g.n + 1):
        for S in combinations(range(g.n), k):
            if predicate(g, dm, S):
                return k, S
    raise AssertionError("V(G) itself must always be a generator")


def metric_dimension(g: Graph, cap: int = DEFAULT_CAP) -> tuple[int, tuple[int, ...]]:
    """Exact dim(G) with the lexicographically-first minimum witness."""
    return _minimum_generator(g, is_metric_generator, cap)


def edge_metric_dimension(g: Graph, cap: int = DEFAULT_CAP) -> tuple[int, tuple[int, ...]]:
    """Exact edim(G) with the lexicographically-first minimum witness."""
    return _minimum_generator(g, is_edge_metric_generator, cap)


def solve_report(g: Graph, cap: int = DEFAULT_CAP) -> dict:
    dim, dim_w = metric_dimension(g, cap)
    edim, edim_w = edge_metric_dimension(g, cap)
    return {
        "dim": dim,
        "dim_witness": list(dim_w),
        "edim": edim,
        "edim_witness": list(edim_w),
        "n": g.n,
        "m": g.m,
    }
