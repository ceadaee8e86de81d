import networkx as nx
import pytest
from hypothesis import given

from conftest import any_graphs, connected_graphs
from oracles import nx_graph, total_graph_nx
from domlab.constructors import (
    FamilySpec,
    complement,
    complete_bipartite,
    complete_graph,
    corona2,
    cycle_graph,
    double_star,
    line_graph,
    make_family,
    path_graph,
    star,
    total_graph,
    wheel,
)
from domlab.errors import Disconnected, InvalidParams, NoEdges, TooSmall
from domlab.graph import EdgeElement, Vertex, build_graph, diameter, is_connected


def _as_nx(G):
    return nx_graph(G.n, G.edges)


class TestFamilies:
    def test_wheel(self):
        W = wheel(5)
        assert (W.n, W.m, W.degree(0)) == (6, 10, 5)
        assert nx.is_isomorphic(_as_nx(W), nx.wheel_graph(6))

    def test_double_star(self):
        S = double_star(3)
        assert (S.n, S.m, diameter(S)) == (7, 6, 4)

    def test_bipartite(self):
        K = complete_bipartite(3, 3)
        assert (K.n, K.m) == (6, 9)
        assert nx.is_isomorphic(_as_nx(K), nx.complete_bipartite_graph(3, 3))

    def test_against_networkx(self):
        for n in range(3, 9):
            assert nx.is_isomorphic(_as_nx(path_graph(n)), nx.path_graph(n))
            assert nx.is_isomorphic(_as_nx(cycle_graph(n)), nx.cycle_graph(n))
            assert nx.is_isomorphic(_as_nx(complete_graph(n)), nx.complete_graph(n))
            assert nx.is_isomorphic(_as_nx(star(n)), nx.star_graph(n))

    def test_spec_validation(self):
        with pytest.raises(InvalidParams):
            FamilySpec("cycle", (2,))
        with pytest.raises(InvalidParams):
            FamilySpec("bipartite", (3, 2))
        with pytest.raises(InvalidParams):
            FamilySpec("tadpole", (3,))
        with pytest.raises(InvalidParams):
            FamilySpec("corona2")
        assert make_family(FamilySpec("path", (4,))) == path_graph(4)


class TestCorona:
    def test_sizes(self):
        H = corona2(path_graph(6)).graph
        assert (H.n, H.m) == (18, 17)
        H = corona2(path_graph(2)).graph
        assert (H.n, H.m) == (6, 5)
        H = corona2(cycle_graph(3)).graph
        assert (H.n, H.m) == (9, 9)

    def test_pendant_paths(self):
        G = cycle_graph(4)
        H = corona2(G).graph
        for i in range(4):
            assert H.has_edge(i, 4 + i) and H.has_edge(4 + i, 8 + i)
            assert H.degree(8 + i) == 1

    def test_errors(self):
        with pytest.raises(TooSmall):
            corona2(build_graph(1))
        with pytest.raises(Disconnected):
            corona2(build_graph(4, [(0, 1), (2, 3)]))

    @given(connected_graphs(max_n=6))
    def test_size_formula(self, G):
        H = corona2(G).graph
        assert H.n == 3 * G.n and H.m == G.m + 2 * G.n and is_connected(H)


class TestLineGraph:
    def test_examples(self):
        assert nx.is_isomorphic(_as_nx(line_graph(path_graph(4)).graph), nx.path_graph(3))
        LK4 = line_graph(complete_graph(4)).graph
        assert LK4.n == 6 and LK4.m == 12 and set(LK4.degrees()) == {4}
        assert line_graph(star(3)).graph == complete_graph(3)

    def test_no_edges(self):
        with pytest.raises(NoEdges):
            line_graph(build_graph(3))

    @given(any_graphs())
    def test_matches_networkx(self, G):
        if G.m == 0:
            return
        L = line_graph(G)
        ref = nx.line_graph(_as_nx(G))
        for a, b in L.graph.edges:
            assert ref.has_edge(L.labels[a].pair, L.labels[b].pair)
        assert L.graph.m == ref.number_of_edges()


class TestTotalGraph:
    def test_examples(self):
        assert total_graph(path_graph(2)).graph == complete_graph(3)
        T = total_graph(path_graph(3)).graph
        assert (T.n, T.m) == (5, 7)
        T = total_graph(cycle_graph(3)).graph
        assert (T.n, T.m) == (6, 12) and set(T.degrees()) == {4}

    def test_labels(self):
        T = total_graph(path_graph(3))
        assert T.labels == (Vertex(0), Vertex(1), Vertex(2), EdgeElement(0, 1), EdgeElement(1, 2))
        assert T.index_of(EdgeElement(1, 2)) == 4

    @given(any_graphs())
    def test_matches_reference(self, G):
        if G.m == 0:
            return
        T = total_graph(G)
        ref = total_graph_nx(G.n, G.edges)

        def key(x):
            return ("v", x.v) if isinstance(x, Vertex) else ("e", x.i, x.j)

        got = {frozenset((key(T.labels[a]), key(T.labels[b]))) for a, b in T.graph.edges}
        want = {frozenset(e) for e in ref.edges}
        assert got == want
        # G and L(G) sit inside T(G) as induced subgraphs; size is 3m + |E(L)|
        assert T.graph.m == 3 * G.m + line_graph(G).graph.m


class TestComplement:
    def test_examples(self):
        assert complement(complete_graph(4)) == build_graph(4)
        assert nx.is_isomorphic(_as_nx(complement(cycle_graph(5))), nx.cycle_graph(5))

    @given(any_graphs(max_n=5))
    def test_involution(self, G):
        assert complement(complement(G)) == G
