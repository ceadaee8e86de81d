"""Edge-list, graph6, DOT and witness-file formats.

Edge list::

    # comment
    n 4
    0 1
    1 2

graph6 follows the standard nauty encoding: the order block ``N(n)`` and then
the upper triangle of the adjacency matrix, column by column, packed six bits
per printable byte (value + 63).
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Optional

from .errors import BadByte, EndpointOutOfRange, LoopEdge, ParseError, TruncatedBits
from .graph import EdgeElement, Graph, MixedSet, Vertex, build_graph, element_sort_key, format_element

# ---------------------------------------------------------------------------
# edge list


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n" or not fields[1].isdigit():
                raise ParseError("expected header 'n <count>'", lineno, col)
            n = int(fields[1])
            continue
        if len(fields) != 2:
            raise ParseError(f"expected two vertex ids, got {len(fields)} field(s)", lineno, col)
        ids = []
        pos = col
        for tok in fields:
            pos = line.index(tok, pos - 1) + 1
            if not tok.isdigit():
                raise ParseError(f"not a vertex id: {tok!r}", lineno, pos)
            ids.append(int(tok))
            pos += len(tok)
        i, j = ids
        if i == j:
            err = LoopEdge(f"line {lineno}: loop at vertex {i}")
            err.line = lineno
            raise err
        for x in ids:
            if x >= n:
                err = EndpointOutOfRange(f"line {lineno}: vertex {x} outside [0, {n})")
                err.line = lineno
                raise err
        edges.append((i, j))
    if n is None:
        raise ParseError("missing header 'n <count>'", 1, 1)
    return build_graph(n, edges)


def format_edge_list(G: Graph) -> str:
    return "".join([f"n {G.n}\n"] + [f"{i} {j}\n" for i, j in G.edges])


# ---------------------------------------------------------------------------
# graph6


def _order_block(n: int) -> str:
    if n < 0 or n > 68719476735:
        raise ValueError(f"graph6 cannot encode n = {n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(G: Graph) -> str:
    bits = []
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            bits.append((row >> i) & 1)
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        body.append(chr(value + 63))
    return _order_block(G.n) + "".join(body)


def parse_graph6(line: str) -> Graph:
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    line = line.rstrip("\r\n")
    for pos, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise BadByte(f"byte {ord(ch)} at position {pos} outside 63..126")
    data = [ord(ch) - 63 for ch in line]
    if not data:
        raise TruncatedBits("empty graph6 string")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 2 and data[1] < 63:
        if len(data) < 4:
            raise TruncatedBits("truncated 18-bit order block")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        if len(data) < 8:
            raise TruncatedBits("truncated 36-bit order block")
        n = 0
        for v in data[2:8]:
            n = (n << 6) | v
        body = data[8:]
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) != need:
        kind = TruncatedBits if len(body) < need else BadByte
        raise kind(f"expected {need} adjacency byte(s) for n = {n}, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if need and body[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise BadByte("nonzero padding bits")
    return build_graph(n, edges)


# ---------------------------------------------------------------------------
# files


def read_graphs(path) -> list[Graph]:
    """Graphs from a file: an edge list (first content line ``n <count>``) or graph6 lines."""
    text = Path(path).read_text() if str(path) != "-" else _stdin()
    return parse_graphs(text)


def _stdin() -> str:
    import sys

    return sys.stdin.read()


def parse_graphs(text: str) -> list[Graph]:
    content = [ln for ln in text.splitlines() if _strip_comment(ln).strip()]
    if not content:
        raise ParseError("no graph in input", 1, 1)
    if content[0].split()[0] == "n":
        return [parse_edge_list(text)]
    return [parse_graph6(ln.strip()) for ln in content]


def read_graph(path) -> Graph:
    graphs = read_graphs(path)
    if len(graphs) != 1:
        raise ParseError(f"expected a single graph, found {len(graphs)}", 1, 1)
    return graphs[0]


# ---------------------------------------------------------------------------
# witnesses and DOT


def format_witness_file(S: Iterable) -> str:
    """One element per line, 0-indexed: ``v 3`` or ``e 0 4``."""
    lines = []
    for x in sorted(S, key=element_sort_key):
        lines.append(f"v {x.v}" if isinstance(x, Vertex) else f"e {x.i} {x.j}")
    return "\n".join(lines) + "\n"


def parse_witness_file(text: str, G: Graph) -> MixedSet:
    els = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = _strip_comment(raw).split()
        if not fields:
            continue
        try:
            if fields[0] == "v" and len(fields) == 2:
                els.add(Vertex(int(fields[1])))
                continue
            if fields[0] == "e" and len(fields) == 3:
                els.add(EdgeElement(int(fields[1]), int(fields[2])))
                continue
        except ValueError:
            pass
        raise ParseError(f"bad witness line {raw.strip()!r}", lineno, 1)
    return MixedSet(frozenset(els), G)


def to_dot(G: Graph, highlight: Optional[MixedSet] = None, name: str = "G") -> str:
    hv = highlight.vertices if highlight else set()
    he = highlight.edges if highlight else set()
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(G.n):
        label = format_element(Vertex(v))
        style = ', style=filled, fillcolor="gold"' if v in hv else ""
        lines.append(f'  {v} [label="{label}"{style}];')
    for i, j in G.edges:
        style = ' [color="red", penwidth=3]' if (i, j) in he else ""
        lines.append(f"  {i} -- {j}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
