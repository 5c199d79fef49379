from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cactusdim import (
    NotCactusError,
    all_pairs_distances,
    build_graph,
    complete_to_geodesic_triple,
    cycle_activity,
    decompose_threads,
    domains,
    find_cycles,
    is_branch_resolving,
    is_geodesic_triple,
    named_family,
    random_cactus,
    random_tree,
    random_unicyclic,
    s_active_vertices,
    structural_report,
)

from oracles import naive_components, naive_tree_L

BOWTIE = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
# triangles 0-1-2 and 3-4-6 joined by the path 2-5-3
TWO_TRIANGLES_PATH = build_graph(
    7, [(0, 1), (1, 2), (0, 2), (2, 5), (5, 3), (3, 4), (4, 6), (3, 6)]
)


def c5_with_leaf():
    return build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])


def c4_with_two_leaves():
    return build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (0, 5)])


class TestFindCycles:
    def test_tree_has_no_cycles(self):
        cs = find_cycles(random_tree(9, seed=3))
        assert cs.cycles == () and cs.cyclomatic_number == 0 and cs.is_cactus

    def test_unicyclic(self):
        cs = find_cycles(c5_with_leaf())
        assert len(cs.cycles) == 1 and len(cs.cycles[0]) == 5
        assert cs.cyclomatic_number == 1

    def test_bowtie_is_cactus(self):
        cs = find_cycles(BOWTIE)
        assert cs.cycles == ((0, 1, 2), (2, 3, 4))
        assert cs.is_cactus and cs.cyclomatic_number == 2

    def test_k4_is_not_cactus(self):
        k4 = build_graph(4, list(combinations(range(4), 2)))
        cs = find_cycles(k4)
        assert not cs.is_cactus and cs.cyclomatic_number == 3

    def test_canonical_cycle_orientation(self):
        cs = find_cycles(named_family("cycle", g=6))
        assert cs.cycles == ((0, 1, 2, 3, 4, 5),)

    def test_edge_to_cycle_map(self):
        cs = find_cycles(BOWTIE)
        assert cs.edge_to_cycle[(0, 1)] == 0
        assert cs.edge_to_cycle[(3, 4)] == 1
        assert (2, 5) not in cs.edge_to_cycle


class TestThreads:
    def test_star(self):
        td = decompose_threads(named_family("star", leaves=3))
        assert td.ell == {0: 3} and td.L == 2

    def test_path_has_none(self):
        td = decompose_threads(named_family("path", n=5))
        assert td.threads == () and td.L == 0

    def test_c4_with_two_leaves(self):
        td = decompose_threads(c4_with_two_leaves())
        assert td.ell == {0: 2} and td.L == 1

    def test_tadpole_tail_is_single_thread(self):
        td = decompose_threads(named_family("tadpole", g=5, tail=2))
        assert td.ell == {0: 1} and td.L == 0
        assert td.threads == ((0, (5, 6)),)

    def test_branch_walk_stops_at_high_degree_vertex(self):
        # from anchor 0, the walk 1-2 ends at branching vertex 3: a branch,
        # not a thread; the other three pendant paths are genuine threads
        g = build_graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5), (0, 6), (0, 7)])
        td = decompose_threads(g)
        assert td.ell == {0: 2, 3: 2}
        assert td.L == 2
        assert (0, (1, 2)) not in td.threads
        assert {3} <= set(td.branching_vertices)

    def test_tree_L_matches_independent_oracle(self):
        for seed in range(40):
            g = random_tree(4 + seed % 11, seed=seed)
            assert decompose_threads(g).L == naive_tree_L(g.n, g.edges)


class TestCycleActivity:
    def test_pendant_leaf_is_not_branching(self):
        g = c5_with_leaf()
        ca = cycle_activity(g, find_cycles(g), 0)
        assert ca.b == 0

    def test_two_leaves_make_branching(self):
        g = c4_with_two_leaves()
        ca = cycle_activity(g, find_cycles(g), 0)
        assert ca.b == 1 and ca.branch_active == (0,)

    def test_bowtie_shared_vertex(self):
        ca = cycle_activity(BOWTIE, find_cycles(BOWTIE), 0)
        assert ca.b == 1 and ca.branch_active == (2,)
        assert ca.component_of[2] == frozenset({2, 3, 4})

    def test_components_match_oracle(self):
        g = TWO_TRIANGLES_PATH
        cs = find_cycles(g)
        ca = cycle_activity(g, cs, 0)
        cycle_edges = {(0, 1), (1, 2), (0, 2)}
        rest = [e for e in g.edges if e not in cycle_edges]
        oracle = {c for c in naive_components(g.n, rest)}
        for v in cs.cycles[0]:
            assert ca.component_of[v] in oracle

    def test_rejects_non_cactus(self):
        k4 = build_graph(4, list(combinations(range(4), 2)))
        with pytest.raises(NotCactusError):
            cycle_activity(k4, find_cycles(k4), 0)


class TestSActive:
    def test_leaf_activates_its_anchor(self):
        g = c5_with_leaf()
        ca = cycle_activity(g, find_cycles(g), 0)
        assert s_active_vertices(g, ca, {5}) == (0,)

    def test_cycle_vertices_activate_themselves(self):
        g = named_family("cycle", g=4)
        ca = cycle_activity(g, find_cycles(g), 0)
        assert s_active_vertices(g, ca, {0, 2}) == (0, 2)

    def test_empty_set(self):
        g = named_family("cycle", g=4)
        ca = cycle_activity(g, find_cycles(g), 0)
        assert s_active_vertices(g, ca, set()) == ()


class TestBranchResolving:
    def test_star_two_leaves(self):
        assert is_branch_resolving(named_family("star", leaves=3), {1, 2})

    def test_star_one_leaf(self):
        assert not is_branch_resolving(named_family("star", leaves=3), {1})

    def test_all_leaves_always_works(self):
        for seed in range(30):
            g = random_tree(5 + seed % 9, seed=seed)
            leaves = {v for v in range(g.n) if g.degree(v) == 1}
            assert is_branch_resolving(g, leaves)


class TestGeodesicTriples:
    def setup_method(self):
        self.c6 = named_family("cycle", g=6)
        self.cs = find_cycles(self.c6)
        self.dm = all_pairs_distances(self.c6)

    def test_equilateral(self):
        assert is_geodesic_triple(self.cs, 0, self.dm, 0, 2, 4)

    def test_mixed(self):
        assert is_geodesic_triple(self.cs, 0, self.dm, 0, 1, 3)

    def test_one_arc_fails(self):
        assert not is_geodesic_triple(self.cs, 0, self.dm, 0, 1, 2)

    def test_off_cycle_vertex_rejected(self):
        g = c5_with_leaf()
        cs, dm = find_cycles(g), all_pairs_distances(g)
        with pytest.raises(ValueError, match="not on cycle"):
            is_geodesic_triple(cs, 0, dm, 0, 1, 5)

    @given(st.permutations([0, 1, 3]))
    def test_permutation_invariance(self, perm):
        assert is_geodesic_triple(self.cs, 0, self.dm, *perm)

    def test_completion_matches_enumeration_oracle(self):
        for anchors in [{0, 3}, {0, 1}, {1, 4}, {2, 5}]:
            got = complete_to_geodesic_triple(self.cs, 0, self.dm, anchors)
            expected = None
            for x in range(6):
                if x in anchors:
                    continue
                if any(
                    is_geodesic_triple(self.cs, 0, self.dm, a, b, x)
                    for a, b in combinations(sorted(anchors), 2)
                ):
                    expected = x
                    break
            assert got == expected and got is not None

    def test_completion_examples(self):
        assert complete_to_geodesic_triple(self.cs, 0, self.dm, {0, 3}) == 1
        assert complete_to_geodesic_triple(self.cs, 0, self.dm, {0, 2, 4}) is None
        c4 = named_family("cycle", g=4)
        cs4, dm4 = find_cycles(c4), all_pairs_distances(c4)
        assert complete_to_geodesic_triple(cs4, 0, dm4, {0, 1}) == 2

    def test_completion_needs_two_anchors(self):
        with pytest.raises(ValueError, match="two distinct anchors"):
            complete_to_geodesic_triple(self.cs, 0, self.dm, {0})


class TestDomains:
    def test_unicyclic_domain_is_whole_graph(self):
        g = c5_with_leaf()
        (dom,) = domains(g, find_cycles(g))
        assert dom.vertices == tuple(range(6))
        assert dom.boundary_vertices == () and dom.connectors == ()

    def test_bowtie_shared_vertex_is_boundary(self):
        doms = domains(BOWTIE, find_cycles(BOWTIE))
        assert doms[0].vertices == (0, 1, 2)
        assert doms[0].boundary_vertices == (2,)
        assert doms[0].connectors == ((2,),)
        assert doms[1].vertices == (2, 3, 4)

    def test_connector_path_domains(self):
        doms = domains(TWO_TRIANGLES_PATH, find_cycles(TWO_TRIANGLES_PATH))
        assert doms[0].vertices == (0, 1, 2, 3, 5)
        assert doms[0].boundary_vertices == (3,)
        assert doms[0].connectors == ((2, 5, 3),)
        assert doms[1].vertices == (2, 3, 4, 5, 6)
        assert doms[1].boundary_vertices == (2,)

    def test_domains_cover_and_are_unicyclic(self):
        for seed in range(25):
            g = random_cactus(9 + seed % 6, 2 + seed % 2, seed=seed)
            cs = find_cycles(g)
            doms = domains(g, cs)
            covered = set()
            for dom in doms:
                covered.update(dom.vertices)
                verts = list(dom.vertices)
                index = {v: i for i, v in enumerate(verts)}
                sub_edges = [
                    (index[u], index[v])
                    for u, v in g.edges
                    if u in index and v in index
                ]
                sub = build_graph(len(verts), sub_edges)
                sub_cs = find_cycles(sub)
                assert sub_cs.cyclomatic_number == 1
                assert {verts[x] for x in sub_cs.cycles[0]} == set(
                    cs.cycles[dom.cycle_index]
                )
            assert covered == set(range(g.n))

    def test_domains_are_isometric(self):
        g = TWO_TRIANGLES_PATH
        dm = all_pairs_distances(g)
        for dom in domains(g, find_cycles(g)):
            verts = list(dom.vertices)
            index = {v: i for i, v in enumerate(verts)}
            sub = build_graph(
                len(verts),
                [(index[u], index[v]) for u, v in g.edges if u in index and v in index],
            )
            sub_dm = all_pairs_distances(sub)
            for u in verts:
                for v in verts:
                    assert sub_dm[index[u]][index[v]] == dm[u][v]

    def test_rejects_acyclic(self):
        g = random_tree(6, seed=0)
        with pytest.raises(ValueError, match="no cycles"):
            domains(g, find_cycles(g))


def test_structural_report_fields():
    report = structural_report(BOWTIE)
    assert set(report) >= {"cycles", "cyclomatic", "L", "ell", "threads", "per_cycle", "domains"}
    assert report["cyclomatic"] == 2
    assert report["per_cycle"] == [
        {"b": 1, "branch_active": [2]},
        {"b": 1, "branch_active": [2]},
    ]
