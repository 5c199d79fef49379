"""Seeded random and named graph families for property tests and scans.

All randomness flows through SplitMix64 so that identical (config, seed)
pairs reproduce edge lists byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, build_graph, normalize_edge

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Steele, Lea & Flood's splitmix64; 64-bit state, one output per step."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        # rejection keeps the draw unbiased
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, a: int, b: int) -> int:
        return a + self.randrange(b - a + 1)

    def choice(self, seq):
        return seq[self.randrange(len(seq))]


def _prufer_tree_edges(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    """Uniform random labeled tree via Prufer sequence decoding."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = degree.index(1)
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    if n < 1:
        raise ValueError("n must be >= 1")
    return build_graph(n, _prufer_tree_edges(n, SplitMix64(seed)))


def random_unicyclic(n: int, cycle_len: int, seed: int) -> Graph:
    """A cycle of the given length with a random forest attached."""
    if not 3 <= cycle_len <= n:
        raise ValueError(f"need 3 <= cycle_len <= n, got cycle_len={cycle_len}, n={n}")
    rng = SplitMix64(seed)
    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    for v in range(cycle_len, n):
        edges.append((rng.randrange(v), v))
    return build_graph(n, edges)


def random_cactus(
    n: int, c: int, seed: int, cycle_len_range: tuple[int, int] = (3, 6)
) -> Graph:
    """Connected cactus with exactly c edge-disjoint cycles.

    Grown by attaching pendant vertices or whole new cycles at uniformly
    chosen existing vertices, which keeps cycles edge-disjoint by
    construction. Needs n >= 2c + 1 (c triangles sharing cut vertices).
    """
    lo, hi = cycle_len_range
    if lo < 3 or hi < lo:
        raise ValueError(f"bad cycle length range {cycle_len_range}")
    if c < 0:
        raise ValueError("cycle count must be >= 0")
    if c == 0:
        return random_tree(n, seed)
    if n < 1 + (lo - 1) * c:
        raise ValueError(f"n={n} too small for {c} cycles of length >= {lo}")
    rng = SplitMix64(seed)
    edges: list[tuple[int, int]] = []
    count = 1
    remaining = c
    while count < n:
        room = n - count
        reserve = (lo - 1) * remaining
        actions = []
        if remaining > 0:
            actions.append("cycle")
        if room > reserve:
            actions.append("pendant")
        action = rng.choice(actions)
        attach = rng.randrange(count)
        if action == "pendant":
            edges.append((attach, count))
            count += 1
        else:
            max_len = min(hi, room - (lo - 1) * (remaining - 1) + 1)
            length = rng.randint(lo, max_len)
            ring = [attach] + list(range(count, count + length - 1))
            edges.extend((ring[t], ring[(t + 1) % length]) for t in range(length))
            count += length - 1
            remaining -= 1
    return build_graph(n, edges)


def random_general(n: int, c: int, seed: int) -> Graph:
    """Random connected graph with cyclomatic number exactly c: a uniform
    tree plus c extra random edges."""
    max_extra = n * (n - 1) // 2 - (n - 1)
    if c < 0 or c > max_extra:
        raise ValueError(f"cyclomatic number {c} infeasible for n={n}")
    rng = SplitMix64(seed)
    edges = set(normalize_edge(*e) for e in _prufer_tree_edges(n, rng))
    added = 0
    while added < c:
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v:
            continue
        e = normalize_edge(u, v)
        if e not in edges:
            edges.add(e)
            added += 1
    return build_graph(n, sorted(edges))


def named_family(name: str, **params) -> Graph:
    """Canonical labeled constructions of the named families."""
    if name == "path":
        n = params["n"]
        return build_graph(n, [(i, i + 1) for i in range(n - 1)]) if n > 1 else build_graph(1, [])
    if name == "cycle":
        g = params["g"]
        return build_graph(g, [(i, (i + 1) % g) for i in range(g)])
    if name == "star":
        k = params["leaves"]
        return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])
    if name == "spider":
        legs, leg_len = params["legs"], params["leg_len"]
        edges = []
        nxt = 1
        for _ in range(legs):
            prev = 0
            for _ in range(leg_len):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
        return build_graph(nxt, edges)
    if name == "tadpole":
        g, tail = params["g"], params["tail"]
        edges = [(i, (i + 1) % g) for i in range(g)]
        prev = 0
        for v in range(g, g + tail):
            edges.append((prev, v))
            prev = v
        return build_graph(g + tail, edges)
    if name == "bowtie":
        return build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    if name == "theta-free-cactus-chain":
        cycles, g = params["cycles"], params.get("cycle_len", 3)
        edges = []
        attach = 0
        nxt = 1
        for _ in range(cycles):
            ring = [attach] + list(range(nxt, nxt + g - 1))
            edges.extend((ring[t], ring[(t + 1) % g]) for t in range(g))
            nxt += g - 1
            attach = nxt - 1
        return build_graph(nxt, edges)
    raise ValueError(f"unknown family {name!r}")


@dataclass(frozen=True)
class GenConfig:
    """Sampling configuration for scans and corpora.

    ``n`` and ``cycles`` are upper bounds; per-trial values are drawn
    uniformly from [n_min, n] and [cycles_min, cycles] (clamped to keep the
    family feasible). Per-trial seeds are ``seed + trial``.
    """

    family: str
    n: int
    cycles: int = 0
    cycle_len_range: tuple[int, int] = (3, 6)
    seed: int = 0
    n_min: int | None = None
    cycles_min: int | None = None
    named_params: dict = field(default_factory=dict)


def sample_graph(config: GenConfig, trial: int) -> Graph:
    """Draw the graph for one trial; deterministic in (config, trial)."""
    seed = (config.seed + trial) & _MASK64
    rng = SplitMix64((seed ^ 0xA5A5A5A5A5A5A5A5) & _MASK64)  # parameter draws only
    c_lo = config.cycles if config.cycles_min is None else config.cycles_min
    c = rng.randint(c_lo, config.cycles) if config.cycles > c_lo else config.cycles
    n_lo = config.n if config.n_min is None else config.n_min
    n = rng.randint(n_lo, config.n) if config.n > n_lo else config.n

    if config.family == "tree":
        return random_tree(n, seed)
    if config.family == "unicyclic":
        lo, hi = config.cycle_len_range
        n = max(n, lo)
        cycle_len = rng.randint(lo, min(hi, n))
        return random_unicyclic(n, cycle_len, seed)
    if config.family == "cactus":
        lo, _ = config.cycle_len_range
        n = max(n, 1 + (lo - 1) * c)
        return random_cactus(n, c, seed, config.cycle_len_range)
    if config.family == "general":
        n = max(n, 3)
        return random_general(n, c, seed)
    if config.family == "named":
        return named_family(**config.named_params)
    raise ValueError(f"unknown family {config.family!r}")
