"""Structural invariants as property tests."""

from itertools import combinations

from hypothesis import given, settings

from conftest import any_graphs, connected_graphs
from domlab.constructors import (
    FamilySpec,
    complete_graph,
    corona2,
    cycle_graph,
    double_star,
    line_graph,
    make_family,
    path_graph,
    total_graph,
)
from domlab.formulas import gamma_tm_formula
from domlab.graph import (
    EdgeElement,
    MixedSet,
    Vertex,
    diameter,
    has_hamiltonian_path,
    incident_edges,
    induced_subgraph,
    is_independent,
    mixed_neighborhood,
)
from domlab.solvers import (
    SolverConfig,
    enumerate_min_tds,
    gamma_t,
    gamma_t_bruteforce,
    gamma_tm,
    is_tmds,
    mixed_masks,
)
import domlab.verify as verify


@given(any_graphs(max_n=6))
def test_incidence_matches_mixed_neighborhood(G):
    for v in range(G.n):
        for e in G.edges:
            assert (e in incident_edges(G, v)) == (Vertex(v) in mixed_neighborhood(G, EdgeElement(*e)))


@given(any_graphs(max_n=7))
def test_edge_neighborhood_size(G):
    for u, v in G.edges:
        assert len(mixed_neighborhood(G, EdgeElement(u, v))) == G.degree(u) + G.degree(v)


def test_path_cycle_diameters():
    for n in range(3, 13):
        assert diameter(path_graph(n)) == n - 1
        assert diameter(cycle_graph(n)) == n // 2


@given(connected_graphs(max_n=6))
def test_total_graph_contains_g_and_line_graph(G):
    T = total_graph(G).graph
    low, _ = induced_subgraph(T, range(G.n))
    high, _ = induced_subgraph(T, range(G.n, G.n + G.m))
    assert low == G and high == line_graph(G).graph
    assert T.n == G.n + G.m
    for i in range(G.n):
        assert T.degree(i) == 2 * G.degree(i)
    for k, (u, v) in enumerate(G.edges):
        assert T.degree(G.n + k) == G.degree(u) + G.degree(v)


@given(connected_graphs(max_n=6))
def test_corona_leaves(G):
    H = corona2(G).graph
    assert min(H.degrees()) == 1 and sum(d == 1 for d in H.degrees()) == G.n


def test_family_hamiltonicity():
    for n in range(2, 9):
        assert has_hamiltonian_path(path_graph(n))[0]
        assert has_hamiltonian_path(complete_graph(n))[0]
    # S_{1,2,2} is P_5; from three arms on there is no Hamiltonian path
    assert has_hamiltonian_path(double_star(2))[0]
    for n in range(3, 6):
        assert not has_hamiltonian_path(double_star(n))[0]


@settings(max_examples=40)
@given(connected_graphs(max_n=6))
def test_no_smaller_tmds_exists(G):
    if G.n + G.m > 14:
        return
    k = gamma_tm(G).value
    masks = mixed_masks(G)
    full = (1 << len(masks)) - 1
    for combo in combinations(range(len(masks)), k - 1):
        dom = 0
        for w in combo:
            dom |= masks[w]
        assert dom != full


@given(connected_graphs(max_n=7))
def test_solve_result_shape(G):
    r = gamma_t(G)
    assert len(r.witness) == r.value == gamma_t_bruteforce(G).value
    r = gamma_tm(G)
    assert len(r.witness) == r.value


@given(connected_graphs(max_n=6))
def test_min_tds_complement_rule(G):
    for S in enumerate_min_tds(G):
        rest = set(range(G.n)) - S
        assert is_tmds(G, MixedSet.of(G, S)) == is_independent(G, rest)


def test_corona_formula_over_small_bases():
    from domlab.corpus import exhaustive_connected

    cfg = SolverConfig(element_cap=64)
    for base in exhaustive_connected(4):
        spec = FamilySpec("corona2", base=base)
        assert gamma_tm(make_family(spec), cfg).value == gamma_tm_formula(spec)


def test_fail_reports_replay(monkeypatch):
    def odd_size_fails(G, cfg=None):
        return verify._report("odd-size", G, G.m % 2 == 0, lhs=G.m, rhs=0)

    monkeypatch.setitem(verify.CHECKS, "odd-size", odd_size_fails)
    report = verify.run_corpus(verify.CorpusSpec.exhaustive(4, checks=("odd-size",)))
    fails = verify.failures(report)
    assert fails
    for r in fails:
        assert r["edges"] and verify.replay(r).status == "Fail"
