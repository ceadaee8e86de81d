"""Canonical simple graphs, mixed elements, and neighborhood operators.

Vertices are ``0..n-1``. Edges are stored normalized (``i < j``) in a sorted
tuple, so structural equality of two :class:`Graph` objects is equality of
``(n, edges)``. Per-vertex neighbor bitmasks (plain Python ints) are derived
once at construction time.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from .errors import (
    Disconnected,
    EdgeNotInGraph,
    ElementNotInGraph,
    EmptyGraph,
    EndpointOutOfRange,
    LoopEdge,
    TooLarge,
)

Edge = tuple[int, int]

HAMILTONIAN_CAP = 20


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _edge_index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_edge_index", {e: k for k, e in enumerate(self.edges)})

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return (i, j) in self._edge_index

    def edge_index(self, e: Edge) -> int:
        """Position of ``e`` in the canonical edge list."""
        try:
            return self._edge_index[normalize_edge(*e)]
        except KeyError:
            raise EdgeNotInGraph(f"edge {e} is not in the graph") from None

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def normalize_edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_graph(n: int, edge_pairs: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a canonical graph, normalizing and deduplicating ``edge_pairs``."""
    if n < 0:
        raise EndpointOutOfRange(f"vertex count must be non-negative, got {n}")
    edges = set()
    for i, j in edge_pairs:
        i, j = int(i), int(j)
        if i == j:
            raise LoopEdge(f"loop at vertex {i}")
        for x in (i, j):
            if not 0 <= x < n:
                raise EndpointOutOfRange(f"endpoint {x} outside [0, {n})")
        edges.add(normalize_edge(i, j))
    return Graph(n, tuple(sorted(edges)))


# ---------------------------------------------------------------------------
# mixed elements


@dataclass(frozen=True, order=True)
class Vertex:
    v: int

    def __str__(self) -> str:
        return f"v_{self.v + 1}"


@dataclass(frozen=True, order=True)
class EdgeElement:
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise LoopEdge(f"loop at vertex {self.i}")
        if self.i > self.j:
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)

    @property
    def pair(self) -> Edge:
        return (self.i, self.j)

    def __str__(self) -> str:
        return format_element(self)


MixedElement = Union[Vertex, EdgeElement]


def element_sort_key(x: MixedElement) -> tuple:
    if isinstance(x, Vertex):
        return (0, x.v, 0)
    return (1, x.i, x.j)


def format_element(x: MixedElement) -> str:
    """1-indexed display name: ``v_3``, ``e_12``; ``e_3,10`` once a label exceeds 9."""
    if isinstance(x, Vertex):
        return f"v_{x.v + 1}"
    a, b = x.i + 1, x.j + 1
    if b <= 9:
        return f"e_{a}{b}"
    return f"e_{a},{b}"


def parse_element(text: str) -> MixedElement:
    """Inverse of :func:`format_element`."""
    text = text.strip()
    kind, _, rest = text.partition("_")
    if kind == "v" and rest.isdigit() and int(rest) >= 1:
        return Vertex(int(rest) - 1)
    if kind == "e":
        if "," in rest:
            a, _, b = rest.partition(",")
        elif len(rest) == 2:
            a, b = rest[0], rest[1]
        else:
            raise ValueError(f"ambiguous edge name {text!r}")
        if a.isdigit() and b.isdigit() and int(a) >= 1 and int(b) >= 1:
            return EdgeElement(int(a) - 1, int(b) - 1)
    raise ValueError(f"cannot parse element {text!r}")


def element_in_graph(G: Graph, x: MixedElement) -> bool:
    if isinstance(x, Vertex):
        return 0 <= x.v < G.n
    return G.has_edge(x.i, x.j)


@dataclass(frozen=True)
class MixedSet:
    """A set of vertices and edges of ``host``."""

    elements: frozenset
    host: Graph = field(repr=False)

    def __post_init__(self):
        for x in self.elements:
            if not element_in_graph(self.host, x):
                raise ElementNotInGraph(f"{x!r} is not an element of the host graph")

    @classmethod
    def of(cls, G: Graph, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()) -> "MixedSet":
        els = {Vertex(v) for v in vertices} | {EdgeElement(*e) for e in edges}
        return cls(frozenset(els), G)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements, key=element_sort_key))

    def __contains__(self, x) -> bool:
        return x in self.elements

    @property
    def vertices(self) -> set[int]:
        return {x.v for x in self.elements if isinstance(x, Vertex)}

    @property
    def edges(self) -> set[Edge]:
        return {x.pair for x in self.elements if isinstance(x, EdgeElement)}

    def display(self) -> list[str]:
        return [format_element(x) for x in self]

    def __str__(self) -> str:
        return "{" + ", ".join(self.display()) + "}"


# ---------------------------------------------------------------------------
# neighborhoods


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise EndpointOutOfRange(f"vertex {v} outside [0, {G.n})")


def open_neighborhood(G: Graph, v: int) -> set[int]:
    _check_vertex(G, v)
    return set(iter_bits(G.adj[v]))


def incident_edges(G: Graph, v: int) -> set[Edge]:
    _check_vertex(G, v)
    return {normalize_edge(v, u) for u in iter_bits(G.adj[v])}


def edge_neighbors(G: Graph, e: Edge) -> set[Edge]:
    i, j = normalize_edge(*e)
    if not G.has_edge(i, j):
        raise EdgeNotInGraph(f"edge {e} is not in the graph")
    out = incident_edges(G, i) | incident_edges(G, j)
    out.discard((i, j))
    return out


def mixed_neighborhood(G: Graph, x: MixedElement) -> set:
    """N_T(x): adjacent vertices and incident edges of a vertex, or endpoints
    and adjacent edges of an edge. ``x`` itself is never included."""
    if not element_in_graph(G, x):
        raise ElementNotInGraph(f"{x!r} is not an element of the graph")
    if isinstance(x, Vertex):
        return {Vertex(u) for u in open_neighborhood(G, x.v)} | {
            EdgeElement(*e) for e in incident_edges(G, x.v)
        }
    return {Vertex(x.i), Vertex(x.j)} | {EdgeElement(*e) for e in edge_neighbors(G, x.pair)}


# ---------------------------------------------------------------------------
# basic invariants


def bfs_distances(G: Graph, source: int) -> list[int]:
    """Shortest-path distances from ``source``; -1 for unreachable vertices."""
    dist = [-1] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in iter_bits(G.adj[u]):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= G.adj[u]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << G.n) - 1


def diameter(G: Graph) -> int:
    if G.n == 0:
        raise EmptyGraph("diameter of the empty vertex set")
    best = 0
    for s in range(G.n):
        dist = bfs_distances(G, s)
        if min(dist) < 0:
            raise Disconnected("diameter is undefined for a disconnected graph")
        best = max(best, max(dist))
    return best


def min_degree(G: Graph) -> int:
    if G.n == 0:
        raise EmptyGraph("no vertices")
    return min(G.degrees())


def max_degree(G: Graph) -> int:
    if G.n == 0:
        raise EmptyGraph("no vertices")
    return max(G.degrees())


def is_independent(G: Graph, S: Iterable[int]) -> bool:
    mask = 0
    for v in S:
        _check_vertex(G, v)
        mask |= 1 << v
    return all(not (G.adj[v] & mask) for v in iter_bits(mask))


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.m == G.n - 1 and is_connected(G)


def induced_subgraph(G: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``keep``, relabeled to ``0..k-1`` (returns the old ids too)."""
    old = sorted(set(keep))
    new = {v: k for k, v in enumerate(old)}
    edges = [(new[i], new[j]) for i, j in G.edges if i in new and j in new]
    return build_graph(len(old), edges), old


def delete_vertices(G: Graph, S: Iterable[int]) -> Graph:
    """G - S, relabeled to consecutive ids."""
    drop = set(S)
    return induced_subgraph(G, (v for v in range(G.n) if v not in drop))[0]


def has_hamiltonian_path(G: Graph, cap: int = HAMILTONIAN_CAP) -> tuple[bool, list[int] | None]:
    """Exact Hamiltonian-path test by subset dynamic programming.

    ``reach[mask]`` is the bitmask of vertices ``v`` such that some path visits
    exactly ``mask`` and ends in ``v``. Refuses graphs above ``cap`` vertices.
    """
    n = G.n
    if n > cap:
        raise TooLarge(f"Hamiltonian path check capped at n <= {cap}, got n = {n}")
    if n == 0:
        return False, None
    if n == 1:
        return True, [0]
    full = (1 << n) - 1
    reach = [0] * (1 << n)
    for v in range(n):
        reach[1 << v] = 1 << v
    adj = G.adj
    for mask in range(1, full + 1):
        ends = reach[mask]
        if not ends:
            continue
        for v in iter_bits(ends):
            ext = adj[v] & ~mask
            for w in iter_bits(ext):
                reach[mask | (1 << w)] |= 1 << w
    if not reach[full]:
        return False, None
    # walk back from any end vertex
    path = []
    mask = full
    v = (reach[full] & -reach[full]).bit_length() - 1
    while True:
        path.append(v)
        prev_mask = mask ^ (1 << v)
        if not prev_mask:
            break
        cands = reach[prev_mask] & adj[v]
        v = (cands & -cands).bit_length() - 1
        mask = prev_mask
    path.reverse()
    return True, path


def is_hamiltonian_path(G: Graph, path: list[int]) -> bool:
    if sorted(path) != list(range(G.n)):
        return False
    return all(G.has_edge(a, b) for a, b in zip(path, path[1:]))
