import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cactusdim import (
    SplitMix64,
    edge_metric_dimension,
    metric_dimension,
    random_cactus,
    random_tree,
    random_unicyclic,
)


def is_path_graph(g):
    return all(g.degree(v) <= 2 for v in range(g.n)) and g.m == g.n - 1


@lru_cache(maxsize=None)
def solved(g):
    """Cached exact (dim, witness, edim, witness) per graph."""
    dim, dim_w = metric_dimension(g)
    edim, edim_w = edge_metric_dimension(g)
    return dim, dim_w, edim, edim_w


@pytest.fixture(scope="session")
def tree_corpus():
    """300 seeded random trees, 4 <= n <= 14, none of them paths."""
    corpus = []
    i = 0
    while len(corpus) < 300:
        n = 4 + len(corpus) % 11
        g = random_tree(n, 1000 * len(corpus) + i)
        i += 1
        if is_path_graph(g):
            continue
        corpus.append(g)
        i = 0
    return corpus


@pytest.fixture(scope="session")
def unicyclic_corpus():
    """300 seeded random unicyclic graphs, 5 <= n <= 14."""
    corpus = []
    for i in range(300):
        n = 5 + i % 10
        rng = SplitMix64(7919 * i + 13)
        cycle_len = rng.randint(3, n)
        corpus.append(random_unicyclic(n, cycle_len, seed=i))
    return corpus


@pytest.fixture(scope="session")
def cactus_corpus():
    """200 seeded random cacti, n <= 14, c in {2, 3}."""
    corpus = []
    for i in range(200):
        c = 2 + i % 2
        rng = SplitMix64(104729 * i + 7)
        n = rng.randint(2 * c + 1, 14)
        corpus.append(random_cactus(n, c, seed=i))
    return corpus
