"""Named graph families and graph transformations with element provenance."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import Disconnected, InvalidParams, NoEdges, TooSmall
from .graph import EdgeElement, Graph, MixedElement, Vertex, build_graph, is_connected

FAMILIES = ("path", "cycle", "complete", "bipartite", "wheel", "double-star", "corona2")


@dataclass(frozen=True)
class LabeledGraph:
    """A derived graph plus the source element each of its vertices stands for."""

    graph: Graph
    labels: tuple  # labels[k] is the MixedElement of the source graph behind vertex k
    source: Optional[Graph] = field(default=None, repr=False, compare=False)

    def label(self, k: int) -> MixedElement:
        return self.labels[k]

    def index_of(self, x: MixedElement) -> int:
        return self.labels.index(x)


@dataclass(frozen=True)
class FamilySpec:
    """``family`` is one of :data:`FAMILIES`; ``params`` holds its integers.

    ``wheel`` with ``n`` means W_n of order n+1. ``corona2`` carries its base
    graph in ``base`` instead of integer parameters.
    """

    family: str
    params: tuple = ()
    base: Optional[Graph] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        validate_family(self)

    def __str__(self) -> str:
        if self.family == "corona2":
            return f"corona2(n={self.base.n if self.base else '?'})"
        return f"{self.family}({', '.join(map(str, self.params))})"


def validate_family(spec: FamilySpec) -> None:
    f, p = spec.family, spec.params
    if f not in FAMILIES:
        raise InvalidParams(f"unknown family {f!r}")
    if f == "corona2":
        if spec.base is None:
            raise InvalidParams("corona2 needs a base graph")
        if spec.base.n < 2 or not is_connected(spec.base):
            raise InvalidParams("corona2 base must be connected with n >= 2")
        return
    need = 2 if f == "bipartite" else 1
    if len(p) != need:
        raise InvalidParams(f"{f} takes {need} integer parameter(s), got {p}")
    lo = {"path": 2, "cycle": 3, "complete": 2, "wheel": 3, "double-star": 1}
    if f == "bipartite":
        m, n = p
        if not 1 <= m <= n:
            raise InvalidParams(f"bipartite needs 1 <= m <= n, got {p}")
    elif p[0] < lo[f]:
        raise InvalidParams(f"{f} needs n >= {lo[f]}, got {p[0]}")


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(k: int) -> Graph:
    """K_{1,k} with center 0."""
    return complete_bipartite(1, k)


def wheel(n: int) -> Graph:
    """W_n: hub 0 joined to the rim cycle 1..n (order n+1)."""
    spokes = [(0, i) for i in range(1, n + 1)]
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return build_graph(n + 1, spokes + rim)


def double_star(n: int) -> Graph:
    """S_{1,n,n}: center 0, middles 1..n, leaf n+i hanging from middle i."""
    edges = [(0, i) for i in range(1, n + 1)] + [(i, n + i) for i in range(1, n + 1)]
    return build_graph(2 * n + 1, edges)


def make_family(spec: FamilySpec) -> Graph:
    f, p = spec.family, spec.params
    if f == "path":
        return path_graph(p[0])
    if f == "cycle":
        return cycle_graph(p[0])
    if f == "complete":
        return complete_graph(p[0])
    if f == "bipartite":
        return complete_bipartite(*p)
    if f == "wheel":
        return wheel(p[0])
    if f == "double-star":
        return double_star(p[0])
    return corona2(spec.base).graph


def corona2(G: Graph) -> LabeledGraph:
    """G o P_2: vertex i gets the pendant path i - (n+i) - (2n+i)."""
    n = G.n
    if n < 2:
        raise TooSmall("corona2 needs a base graph with n >= 2")
    if not is_connected(G):
        raise Disconnected("corona2 needs a connected base graph")
    extra = [(i, n + i) for i in range(n)] + [(n + i, 2 * n + i) for i in range(n)]
    H = build_graph(3 * n, list(G.edges) + extra)
    return LabeledGraph(H, tuple(Vertex(v) for v in range(3 * n)), G)


def line_graph(G: Graph) -> LabeledGraph:
    """L(G): vertex k is the k-th canonical edge of G."""
    if G.m == 0:
        raise NoEdges("line graph of an edgeless graph")
    edges = []
    for a, (i, j) in enumerate(G.edges):
        for b in range(a + 1, G.m):
            u, v = G.edges[b]
            if i == u or i == v or j == u or j == v:
                edges.append((a, b))
    labels = tuple(EdgeElement(i, j) for i, j in G.edges)
    return LabeledGraph(build_graph(G.m, edges), labels, G)


def total_graph(G: Graph) -> LabeledGraph:
    """T(G) on ids [0, n) for vertices and [n, n+m) for edges in canonical order."""
    if G.m == 0:
        raise NoEdges("total graph of an edgeless graph")
    n = G.n
    L = line_graph(G).graph
    edges = list(G.edges)
    for k, (i, j) in enumerate(G.edges):
        edges.append((i, n + k))
        edges.append((j, n + k))
    edges.extend((n + a, n + b) for a, b in L.edges)
    labels = tuple(Vertex(v) for v in range(n)) + tuple(EdgeElement(i, j) for i, j in G.edges)
    return LabeledGraph(build_graph(n + G.m, edges), labels, G)


def complement(G: Graph) -> Graph:
    return build_graph(
        G.n, [(i, j) for i in range(G.n) for j in range(i + 1, G.n) if not G.has_edge(i, j)]
    )
