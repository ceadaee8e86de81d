"""Small-graph corpora: exhaustive connected graphs, Pruefer trees, random graphs.

Isomorphism dedup uses a canonical form computed by colour refinement
followed by a search over the permutations that respect the refined cells.
That is exact but only practical for n <= 7, which is all it is used for.
"""

from __future__ import annotations

import hashlib
import heapq
import random
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator

from .errors import CapExceeded
from .graph import Graph, bfs_distances, build_graph, is_connected, is_tree, iter_bits

CANONICAL_CAP = 7


def graph_digest(G: Graph) -> str:
    text = f"{G.n}:" + ",".join(f"{i}-{j}" for i, j in G.edges)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# canonical forms


def _refine(G: Graph) -> list[int]:
    """Stable colour refinement; colours are ranks of isomorphism-invariant signatures."""
    colors = G.degrees()
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(G.adj[v])))) for v in range(G.n)
        ]
        ranking = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict:
    return {(i, j): k for k, (i, j) in enumerate(combinations(range(n), 2))}


def canonical_form(G: Graph) -> tuple[int, int]:
    """``(n, code)`` equal for two graphs iff they are isomorphic."""
    n = G.n
    if n > CANONICAL_CAP:
        raise CapExceeded(f"canonical form is limited to n <= {CANONICAL_CAP}")
    colors = _refine(G)
    cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    index = _pair_index(n)
    best = None
    for choice in product(*(permutations(cell) for cell in cells)):
        order = [v for part in choice for v in part]
        new = [0] * n
        for k, v in enumerate(order):
            new[v] = k
        code = 0
        for i, j in G.edges:
            a, b = new[i], new[j]
            code |= 1 << index[(a, b) if a < b else (b, a)]
        if best is None or code > best:
            best = code
    return n, best


def graph_from_code(n: int, code: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return build_graph(n, [pairs[k] for k in iter_bits(code)])


def canonical_graph(G: Graph) -> Graph:
    return graph_from_code(*canonical_form(G))


def tree_certificate(T: Graph) -> str:
    """AHU encoding rooted at the center(s); equal for isomorphic trees."""
    if T.n == 1:
        return "()"
    ecc = [max(bfs_distances(T, v)) for v in range(T.n)]
    radius = min(ecc)
    centers = [v for v in range(T.n) if ecc[v] == radius]

    def enc(v: int, parent: int) -> str:
        return "(" + "".join(sorted(enc(u, v) for u in iter_bits(T.adj[v]) if u != parent)) + ")"

    return min(enc(c, -1) for c in centers)


# ---------------------------------------------------------------------------
# exhaustive connected graphs


def labeled_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labelled graph on vertices 0..n-1."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        G = build_graph(n, [pairs[k] for k in iter_bits(code)])
        if is_connected(G):
            yield G


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (build_graph(1),)
    found = set()
    # a connected graph always has a non-cut vertex, so extending connected
    # graphs on n-1 vertices by one vertex reaches every class
    for H in _connected_classes(n - 1):
        for nbrs in range(1, 1 << (n - 1)):
            G = build_graph(n, list(H.edges) + [(v, n - 1) for v in iter_bits(nbrs)])
            found.add(canonical_form(G)[1])
    return tuple(graph_from_code(n, code) for code in sorted(found))


def connected_graphs(n: int, dedup: bool = True) -> list[Graph]:
    """Connected graphs of order ``n``: one per isomorphism class, or all labelled ones."""
    if n < 1:
        return []
    if dedup:
        if n > CANONICAL_CAP:
            raise CapExceeded(f"isomorphism dedup is limited to n <= {CANONICAL_CAP}")
        return list(_connected_classes(n))
    return list(labeled_connected_graphs(n))


def exhaustive_connected(max_n: int, dedup: bool = True, min_n: int = 2) -> list[Graph]:
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(connected_graphs(n, dedup))
    return out


# ---------------------------------------------------------------------------
# trees


def prufer_decode(seq) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return build_graph(n, edges)


def prufer_encode(T: Graph) -> list[int]:
    if not is_tree(T) or T.n < 2:
        raise ValueError("Pruefer code needs a tree with n >= 2")
    adj = [set(T.neighbors(v)) for v in range(T.n)]
    leaves = [v for v in range(T.n) if len(adj[v]) == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(T.n - 2):
        leaf = heapq.heappop(leaves)
        (parent,) = adj[leaf]
        seq.append(parent)
        adj[parent].discard(leaf)
        if len(adj[parent]) == 1:
            heapq.heappush(leaves, parent)
    return seq


def _multiset_permutations(counts: list[int]) -> Iterator[tuple[int, ...]]:
    total = sum(counts)
    seq = []

    def rec():
        if len(seq) == total:
            yield tuple(seq)
            return
        for sym, c in enumerate(counts):
            if c:
                counts[sym] -= 1
                seq.append(sym)
                yield from rec()
                seq.pop()
                counts[sym] += 1

    yield from rec()


def _nonincreasing_counts(total: int, parts: int, cap: int) -> Iterator[list[int]]:
    if parts == 0:
        if total == 0:
            yield []
        return
    for first in range(min(total, cap), -1, -1):
        for rest in _nonincreasing_counts(total - first, parts - 1, first):
            yield [first] + rest


def prufer_sequences(n: int, dedup: bool = True) -> Iterator[tuple[int, ...]]:
    """Pruefer sequences of length n-2.

    With ``dedup`` only sequences in which label ``i`` occurs at least as
    often as label ``i+1`` are produced. Relabelling any tree by decreasing
    degree gives such a sequence, so every isomorphism class is still hit.
    """
    if n < 2:
        return
    if not dedup:
        yield from product(range(n), repeat=n - 2)
        return
    for counts in _nonincreasing_counts(n - 2, n, n - 2):
        yield from _multiset_permutations(counts)


def all_trees(n: int, dedup: bool = True) -> list[Graph]:
    """Trees on n vertices by Pruefer enumeration, one per isomorphism class with ``dedup``."""
    if n == 1:
        return [build_graph(1)]
    if not dedup:
        return [prufer_decode(s) for s in prufer_sequences(n, False)]
    seen = {}
    for s in prufer_sequences(n, True):
        T = prufer_decode(s)
        seen.setdefault(tree_certificate(T), T)
    return [seen[k] for k in sorted(seen)]


def random_tree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return build_graph(1)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)])


def random_trees(count: int, max_n: int, seed: int, min_n: int = 2) -> list[Graph]:
    rng = random.Random(seed)
    return [random_tree(rng.randint(min_n, max_n), rng) for _ in range(count)]


def random_connected(count: int, max_n: int, edge_prob: float, seed: int, min_n: int = 2) -> list[Graph]:
    """Random spanning tree plus every other pair independently with ``edge_prob``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        T = random_tree(n, rng)
        extra = [(i, j) for i, j in combinations(range(n), 2) if rng.random() < edge_prob]
        out.append(build_graph(n, list(T.edges) + extra))
    return out
