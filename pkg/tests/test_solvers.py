import pytest
from hypothesis import given, settings

import oracles
from conftest import connected_graphs
from domlab.constructors import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    line_graph,
    path_graph,
    star,
    total_graph,
    wheel,
)
from domlab.errors import BudgetExhausted, EmptyResidual, IsolatedVertex, TooLarge
from domlab.graph import EdgeElement, MixedSet, Vertex, build_graph
from domlab.solvers import (
    Method,
    SolverConfig,
    beta_param,
    c_line_param,
    c_line_params,
    clique_params,
    clique_transversal_param,
    enumerate_min_tds,
    gamma_m,
    gamma_t,
    gamma_t_bruteforce,
    gamma_tm,
    gamma_tm_direct,
    greedy_tmds,
    is_mds,
    is_tds,
    is_tmds,
    maximal_cliques,
    min_vertex_cover,
)

K2 = path_graph(2)
P3 = path_graph(3)


class TestPredicates:
    def test_is_tds(self):
        assert is_tds(wheel(5), {0, 1})
        assert is_tds(path_graph(4), {1, 2})
        assert not is_tds(complete_graph(3), {0})
        assert is_tds(cycle_graph(4), {0, 1})
        assert not is_tds(cycle_graph(4), {0, 2})

    def test_is_mds(self):
        assert is_mds(K2, MixedSet.of(K2, [0]))
        assert is_mds(P3, MixedSet.of(P3, [1]))
        P5 = path_graph(5)
        assert not is_mds(P5, MixedSet.of(P5, [2]))

    def test_is_tmds(self):
        K33 = complete_bipartite(3, 3)
        assert is_tmds(K33, MixedSet.of(K33, [0, 1, 2, 3]))
        assert not is_tmds(K2, MixedSet.of(K2, [0]))
        W5 = wheel(5)
        assert is_tmds(W5, MixedSet.of(W5, [0, 1, 3, 5]))

    def test_isolated(self):
        G = build_graph(3, [(0, 1)])
        with pytest.raises(IsolatedVertex):
            is_tmds(G, MixedSet.of(G, [0]))

    @given(connected_graphs(max_n=6))
    def test_tmds_implies_mds(self, G):
        S = greedy_tmds(G)
        assert is_tmds(G, S) and is_mds(G, S)


class TestGammaT:
    def test_examples(self):
        assert gamma_t(wheel(5)).value == 2
        assert gamma_t(path_graph(4)).value == 2
        assert gamma_t(line_graph(complete_graph(6)).graph).value == 4

    def test_method_and_witness(self):
        r = gamma_t(cycle_graph(7))
        assert r.method is Method.DIRECT_SEARCH and is_tds(cycle_graph(7), r.witness)
        assert len(r.witness) == r.value == 4

    def test_budget(self):
        with pytest.raises(BudgetExhausted):
            gamma_t(cycle_graph(30), SolverConfig(node_budget=3))

    def test_isolated(self):
        with pytest.raises(IsolatedVertex):
            gamma_t(build_graph(3, [(0, 1)]))

    def test_tie_break_variants_agree(self):
        for G in (cycle_graph(13), wheel(7), complete_bipartite(3, 5), path_graph(16)):
            a = gamma_t(G, SolverConfig(tie_break="fewest-candidates")).value
            b = gamma_t(G, SolverConfig(tie_break="lowest-index")).value
            assert a == b

    @given(connected_graphs(max_n=8))
    def test_against_oracle(self, G):
        assert gamma_t(G).value == oracles.gamma_t(G.n, G.edges) == gamma_t_bruteforce(G).value


class TestGammaTM:
    def test_examples(self):
        assert gamma_tm(cycle_graph(11)).value == 7
        assert gamma_tm(complete_graph(4)).value == 3
        assert gamma_tm(K2).value == 2
        assert gamma_tm(path_graph(7)).value == 4
        assert gamma_tm(cycle_graph(4)).value == 3
        assert gamma_tm(star(3)).value == 2

    def test_witness_is_mixed(self):
        r = gamma_tm(cycle_graph(11))
        assert r.method is Method.TOTAL_GRAPH_REDUCTION
        assert isinstance(r.witness, MixedSet) and len(r.witness) == 7
        assert is_tmds(cycle_graph(11), r.witness)

    def test_cap(self):
        with pytest.raises(TooLarge):
            gamma_tm(complete_graph(8))
        assert gamma_tm(complete_graph(8), SolverConfig(element_cap=40)).value == 6

    def test_env_cap(self, monkeypatch):
        monkeypatch.setenv("DOMLAB_ELEMENT_CAP", "10")
        with pytest.raises(TooLarge):
            gamma_tm(path_graph(6), SolverConfig())
        monkeypatch.setenv("DOMLAB_ELEMENT_CAP", "64")
        assert SolverConfig().element_cap == 64

    def test_direct(self):
        r = gamma_tm_direct(cycle_graph(5))
        assert r.method is Method.BRUTE_FORCE and r.value == gamma_tm(cycle_graph(5)).value
        with pytest.raises(TooLarge):
            gamma_tm_direct(complete_graph(7))

    @given(connected_graphs(max_n=6))
    def test_against_oracle(self, G):
        assert gamma_tm(G).value == oracles.gamma_tm(G.n, G.edges)

    @given(connected_graphs(max_n=7))
    def test_identity_and_bounds(self, G):
        tm = gamma_tm(G).value
        assert tm == gamma_t(total_graph(G).graph).value
        # V itself is a TMDS once delta >= 1
        assert 2 <= tm <= G.n

    @settings(max_examples=25)
    @given(connected_graphs(max_n=5))
    def test_direct_matches_reduction(self, G):
        assert gamma_tm_direct(G).value == gamma_tm(G).value


class TestGammaM:
    def test_examples(self):
        assert gamma_m(K2).value == 1
        assert gamma_m(P3).value == 1
        assert gamma_m(path_graph(5)).value == 2

    @settings(max_examples=30)
    @given(connected_graphs(max_n=5))
    def test_against_oracle(self, G):
        r = gamma_m(G)
        assert r.value == oracles.gamma_m(G.n, G.edges)
        assert is_mds(G, r.witness)
        assert r.value <= gamma_tm(G).value


class TestAuxiliary:
    def test_vertex_cover(self):
        assert min_vertex_cover(path_graph(5)).value == 2
        assert min_vertex_cover(complete_graph(4)).value == 3
        assert min_vertex_cover(build_graph(4)).value == 0

    @given(connected_graphs(max_n=8))
    def test_vertex_cover_oracle(self, G):
        assert min_vertex_cover(G).value == oracles.vertex_cover(G.n, G.edges)

    def test_enumerate_min_tds(self):
        assert enumerate_min_tds(complete_graph(3)) == [{0, 1}, {0, 2}, {1, 2}]
        assert enumerate_min_tds(path_graph(4)) == [{1, 2}]
        assert {0, 1} in enumerate_min_tds(wheel(5))

    def test_beta_param(self):
        assert beta_param(wheel(6)) == 2
        assert beta_param(complete_graph(4)) == 1
        assert beta_param(path_graph(4)) == 0

    def test_clique_params(self):
        assert clique_transversal_param(complete_graph(5), {0, 1}) == 1
        assert clique_params(path_graph(4), set()) == (2, 2)
        with pytest.raises(EmptyResidual):
            clique_params(K2, {0, 1})
        LW5 = line_graph(wheel(5)).graph
        D = enumerate_min_tds(LW5)[0]
        assert clique_transversal_param(LW5, D) <= 3

    def test_maximal_cliques(self):
        assert maximal_cliques(path_graph(4)) == [0b0011, 0b0110, 0b1100]
        assert maximal_cliques(complete_graph(4)) == [0b1111]

    def test_c_line(self):
        assert c_line_param(star(3)) == 1
        assert c_line_param(cycle_graph(6)) == 1
        assert c_line_param(wheel(5)) == 2
        t, p = c_line_params(wheel(5))
        assert t == 2 and p >= 0
        tl = gamma_t(line_graph(wheel(5)).graph).value
        assert tl + t >= gamma_tm(wheel(5)).value == 4
        tl = gamma_t(line_graph(star(3)).graph).value
        assert gamma_tm(star(3)).value <= tl + c_line_param(star(3))

    def test_greedy(self):
        S = greedy_tmds(K2)
        assert len(S) == 2 and is_tmds(K2, S)
        S = greedy_tmds(path_graph(7))
        assert is_tmds(path_graph(7), S) and 4 <= len(S) <= 6

    @given(connected_graphs(max_n=8))
    def test_greedy_valid(self, G):
        S = greedy_tmds(G)
        assert is_tmds(G, S) and len(S) >= gamma_tm(G).value


def test_mixed_elements_roundtrip_through_total_graph():
    G = cycle_graph(5)
    r = gamma_tm(G)
    T = total_graph(G)
    ids = {T.index_of(x) for x in r.witness}
    assert is_tds(T.graph, ids)
    assert all(isinstance(x, (Vertex, EdgeElement)) for x in r.witness)
