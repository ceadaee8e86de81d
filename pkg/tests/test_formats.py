import random

import networkx as nx
import pytest
from hypothesis import given

from conftest import any_graphs
from oracles import nx_graph
from domlab.constructors import cycle_graph, path_graph
from domlab.errors import BadByte, EndpointOutOfRange, LoopEdge, ParseError, TruncatedBits
from domlab.formats import (
    encode_graph6,
    format_edge_list,
    format_witness_file,
    parse_edge_list,
    parse_graph6,
    parse_graphs,
    parse_witness_file,
    read_graph,
    read_graphs,
    to_dot,
)
from domlab.graph import MixedSet, build_graph


def _nx_g6(G):
    return nx.to_graph6_bytes(nx_graph(G.n, G.edges), header=False).decode().strip()


def _random_graph(rng, max_n=30):
    n = rng.randint(1, max_n)
    p = rng.random()
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


class TestEdgeList:
    def test_examples(self):
        assert parse_edge_list("n 3\n0 1\n1 2\n") == path_graph(3)
        assert parse_edge_list("n 4\n# square\n0 1\n1 2\n2 3\n3 0\n") == cycle_graph(4)

    def test_loop_has_line(self):
        with pytest.raises(LoopEdge) as exc:
            parse_edge_list("n 2\n0 0\n")
        assert exc.value.line == 2

    def test_out_of_range(self):
        with pytest.raises(EndpointOutOfRange) as exc:
            parse_edge_list("n 2\n\n0 5\n")
        assert exc.value.line == 3

    def test_positioned_errors(self):
        with pytest.raises(ParseError) as exc:
            parse_edge_list("n 3\n0 1\n1 x\n")
        assert (exc.value.line, exc.value.column) == (3, 3)
        with pytest.raises(ParseError) as exc:
            parse_edge_list("0 1\n")
        assert exc.value.line == 1
        with pytest.raises(ParseError):
            parse_edge_list("n 3\n0 1 2\n")
        with pytest.raises(ParseError):
            parse_edge_list("# nothing\n")

    @given(any_graphs(max_n=10))
    def test_roundtrip(self, G):
        assert parse_edge_list(format_edge_list(G)) == G


class TestGraph6:
    def test_k2(self):
        assert encode_graph6(path_graph(2)) == "A_"
        assert _nx_g6(path_graph(2)) == "A_"

    def test_known_string(self):
        G = parse_graph6("D?{")
        assert G.n == 5 and encode_graph6(G) == "D?{"
        ref = nx.from_graph6_bytes(b"D?{")
        assert sorted(map(tuple, map(sorted, ref.edges))) == list(G.edges)

    def test_empty(self):
        with pytest.raises(TruncatedBits):
            parse_graph6("")

    def test_bad_bytes(self):
        with pytest.raises(BadByte):
            parse_graph6("D?{ ")
        with pytest.raises(BadByte):
            parse_graph6("A~")  # padding bits set
        with pytest.raises(BadByte):
            parse_graph6("A__")  # too many bytes
        with pytest.raises(TruncatedBits):
            parse_graph6("D?")

    def test_header_and_large_order(self):
        G = path_graph(70)
        s = encode_graph6(G)
        assert s.startswith("~") and s == _nx_g6(G)
        assert parse_graph6(">>graph6<<" + s) == G

    def test_matches_networkx_1000(self):
        rng = random.Random(2024)
        for _ in range(1000):
            G = _random_graph(rng)
            s = encode_graph6(G)
            assert s == _nx_g6(G)
            assert parse_graph6(s) == G

    def test_file_of_lines(self, tmp_path):
        gs = [path_graph(4), cycle_graph(5), build_graph(1)]
        f = tmp_path / "g.g6"
        f.write_text("".join(encode_graph6(G) + "\n" for G in gs))
        assert read_graphs(f) == gs
        with pytest.raises(ParseError):
            read_graph(f)


class TestWitnessAndDot:
    def test_witness_roundtrip(self):
        G = cycle_graph(5)
        S = MixedSet.of(G, [0, 2], [(3, 4)])
        text = format_witness_file(S)
        assert text == "v 0\nv 2\ne 3 4\n"
        assert parse_witness_file(text, G) == S

    def test_witness_errors(self):
        with pytest.raises(ParseError):
            parse_witness_file("x 1\n", path_graph(2))

    def test_dot_highlight(self):
        G = path_graph(3)
        dot = to_dot(G, MixedSet.of(G, [0], [(1, 2)]))
        assert '0 [label="v_1", style=filled, fillcolor="gold"];' in dot
        assert '1 -- 2 [color="red", penwidth=3];' in dot
        assert "0 -- 1;" in dot
        assert dot.startswith("graph G {")

    def test_autodetect(self):
        assert parse_graphs("n 2\n0 1\n") == [path_graph(2)]
        assert parse_graphs("A_\nBw\n") == [path_graph(2), build_graph(3, [(0, 1), (0, 2), (1, 2)])]
