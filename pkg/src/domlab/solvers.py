"""Exact total, mixed, and total mixed domination.

The main engine, :func:`min_total_dominating_set`, is a branch-and-bound search
for a minimum total dominating set of a graph given by neighbor bitmasks. The
total mixed domination number is obtained by running it on the total graph and
mapping the witness back to vertices and edges of the source graph.
:func:`gamma_tm_direct` is an independent cross-check that enumerates subsets of
V u E by increasing size and never builds the total graph.
"""

from __future__ import annotations

import enum
import os
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional, Union

from .constructors import line_graph, total_graph
from .errors import (
    BudgetExhausted,
    EmptyGraph,
    EmptyResidual,
    IsolatedVertex,
    TooLarge,
)
from .graph import (
    EdgeElement,
    Graph,
    MixedElement,
    MixedSet,
    Vertex,
    delete_vertices,
    iter_bits,
    mixed_neighborhood,
)

DEFAULT_ELEMENT_CAP = 34
DEFAULT_DIRECT_CAP = 24


def default_element_cap() -> int:
    raw = os.environ.get("DOMLAB_ELEMENT_CAP")
    return int(raw) if raw else DEFAULT_ELEMENT_CAP


class Method(str, enum.Enum):
    TOTAL_GRAPH_REDUCTION = "TotalGraphReduction"
    DIRECT_SEARCH = "DirectSearch"
    BRUTE_FORCE = "BruteForce"


@dataclass
class SolverConfig:
    node_budget: Optional[int] = None
    element_cap: int = field(default_factory=default_element_cap)
    direct_cap: int = DEFAULT_DIRECT_CAP
    # "fewest-candidates": branch on the undominated element with fewest
    # remaining candidates (ties by lowest index); "lowest-index": plain order.
    tie_break: str = "fewest-candidates"

    def __post_init__(self):
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node_budget must be positive")
        if self.element_cap <= 0 or self.direct_cap <= 0:
            raise ValueError("caps must be positive")
        if self.tie_break not in ("fewest-candidates", "lowest-index"):
            raise ValueError(f"unknown tie_break {self.tie_break!r}")


@dataclass
class SolveResult:
    value: int
    witness: Union[frozenset, MixedSet]
    method: Method
    nodes_explored: int = 0
    elapsed: float = 0.0


# ---------------------------------------------------------------------------
# element indexing for V u E


def elements(G: Graph) -> list[MixedElement]:
    """V u E in index order: vertices 0..n-1, then edges in canonical order."""
    return [Vertex(v) for v in range(G.n)] + [EdgeElement(i, j) for i, j in G.edges]


@lru_cache(maxsize=4096)
def mixed_masks(G: Graph) -> tuple[int, ...]:
    """Neighbor bitmask of every element of V u E, from the N_T definition."""
    els = elements(G)
    index = {x: k for k, x in enumerate(els)}
    masks = []
    for x in els:
        mask = 0
        for y in mixed_neighborhood(G, x):
            mask |= 1 << index[y]
        masks.append(mask)
    return tuple(masks)


def element_index(G: Graph, x: MixedElement) -> int:
    if isinstance(x, Vertex):
        return x.v
    return G.n + G.edge_index(x.pair)


def mixed_set_mask(G: Graph, S: MixedSet) -> int:
    mask = 0
    for x in S.elements:
        mask |= 1 << element_index(G, x)
    return mask


def mask_to_mixed_set(G: Graph, mask: int) -> MixedSet:
    els = elements(G)
    return MixedSet(frozenset(els[k] for k in iter_bits(mask)), G)


def _vertex_mask(S) -> int:
    mask = 0
    for v in S:
        mask |= 1 << v
    return mask


def _require_no_isolated(G: Graph) -> None:
    if G.n == 0:
        raise EmptyGraph("graph has no vertices")
    for v, a in enumerate(G.adj):
        if not a:
            raise IsolatedVertex(f"vertex {v} is isolated (delta = 0)")


def _dominated(adj, chosen: int) -> int:
    out = 0
    for w in iter_bits(chosen):
        out |= adj[w]
    return out


# ---------------------------------------------------------------------------
# predicates


def is_tds(G: Graph, S) -> bool:
    """Every vertex has a neighbor in ``S``."""
    chosen = _vertex_mask(S)
    return _dominated(G.adj, chosen) == (1 << G.n) - 1


def is_mds(G: Graph, S: MixedSet) -> bool:
    """Every element of V u E outside ``S`` has a mixed neighbor in ``S``."""
    masks = mixed_masks(G)
    chosen = mixed_set_mask(G, S)
    full = (1 << len(masks)) - 1
    return (_dominated(masks, chosen) | chosen) == full


def is_tmds(G: Graph, S: MixedSet) -> bool:
    """Every element of V u E, members of ``S`` included, has a mixed neighbor in ``S``."""
    _require_no_isolated(G)
    masks = mixed_masks(G)
    chosen = mixed_set_mask(G, S)
    return _dominated(masks, chosen) == (1 << len(masks)) - 1


# ---------------------------------------------------------------------------
# branch and bound for minimum total domination on bitmask graphs


def greedy_tds(adj) -> int:
    """Greedy total dominating set: repeatedly take the element covering most
    undominated elements (lowest index on ties). ``adj`` must have no zero row."""
    N = len(adj)
    undominated = (1 << N) - 1
    chosen = 0
    while undominated:
        best_w, best_cov = -1, 0
        for w in range(N):
            cov = (adj[w] & undominated).bit_count()
            if cov > best_cov:
                best_w, best_cov = w, cov
        chosen |= 1 << best_w
        undominated &= ~adj[best_w]
    return chosen


class _Search:
    def __init__(self, adj, cfg: SolverConfig):
        self.adj = adj
        self.N = len(adj)
        self.cfg = cfg
        self.nodes = 0
        self.best_mask = greedy_tds(adj)
        self.best = self.best_mask.bit_count()
        self.fewest = cfg.tie_break == "fewest-candidates"

    def run(self) -> tuple[int, int]:
        full = (1 << self.N) - 1
        self._branch(full, 0, 0, 0)
        return self.best_mask, self.nodes

    def _branch(self, undominated: int, chosen: int, count: int, forbidden: int) -> None:
        self.nodes += 1
        budget = self.cfg.node_budget
        if budget is not None and self.nodes > budget:
            raise BudgetExhausted(self.nodes)
        if not undominated:
            if count < self.best:
                self.best, self.best_mask = count, chosen
            return
        adj = self.adj
        allowed = ((1 << self.N) - 1) & ~forbidden & ~chosen
        # admissible bound: each further pick covers at most max_cov new elements
        max_cov = 0
        for w in iter_bits(allowed):
            c = (adj[w] & undominated).bit_count()
            if c > max_cov:
                max_cov = c
        if not max_cov:
            return
        remaining = undominated.bit_count()
        if count + -(-remaining // max_cov) >= self.best:
            return
        if self.fewest:
            u, cands, fewest = -1, 0, self.N + 1
            for x in iter_bits(undominated):
                c = adj[x] & allowed
                k = c.bit_count()
                if k < fewest:
                    u, cands, fewest = x, c, k
                    if k <= 1:
                        break
        else:
            u = (undominated & -undominated).bit_length() - 1
            cands = adj[u] & allowed
        if not cands:
            return
        order = sorted(iter_bits(cands), key=lambda w: (-(adj[w] & undominated).bit_count(), w))
        for w in order:
            self._branch(undominated & ~adj[w], chosen | (1 << w), count + 1, forbidden)
            forbidden |= 1 << w
            if count + 1 >= self.best:
                return


def min_total_dominating_set(adj, cfg: Optional[SolverConfig] = None) -> tuple[int, int]:
    """Minimum total dominating set of the graph with neighbor masks ``adj``.

    Returns ``(set_mask, nodes_explored)``. Every row of ``adj`` must be nonzero.
    """
    cfg = cfg or SolverConfig()
    if any(a == 0 for a in adj):
        raise IsolatedVertex("graph has an isolated element")
    if not adj:
        return 0, 0
    return _Search(tuple(adj), cfg).run()


def _certify(ok: bool, what: str) -> None:
    if not ok:
        raise RuntimeError(f"internal error: {what} witness failed validation")


# ---------------------------------------------------------------------------
# domination numbers


def gamma_t(G: Graph, cfg: Optional[SolverConfig] = None) -> SolveResult:
    """Total domination number with a minimum witness."""
    _require_no_isolated(G)
    t0 = time.perf_counter()
    mask, nodes = min_total_dominating_set(G.adj, cfg)
    S = frozenset(iter_bits(mask))
    _certify(is_tds(G, S), "gamma_t")
    return SolveResult(len(S), S, Method.DIRECT_SEARCH, nodes, time.perf_counter() - t0)


def gamma_t_bruteforce(G: Graph) -> SolveResult:
    """Total domination number by trying vertex subsets in order of size."""
    _require_no_isolated(G)
    t0 = time.perf_counter()
    full = (1 << G.n) - 1
    tried = 0
    for k in range(1, G.n + 1):
        for combo in combinations(range(G.n), k):
            tried += 1
            dom = 0
            for v in combo:
                dom |= G.adj[v]
            if dom == full:
                return SolveResult(k, frozenset(combo), Method.BRUTE_FORCE, tried,
                                   time.perf_counter() - t0)
    raise AssertionError("unreachable: V is a TDS when delta >= 1")


def _check_cap(G: Graph, cap: int) -> None:
    if G.n + G.m > cap:
        raise TooLarge(f"|V u E| = {G.n + G.m} exceeds the element cap {cap}")


def gamma_tm(G: Graph, cfg: Optional[SolverConfig] = None) -> SolveResult:
    """Total mixed domination number, computed as gamma_t of the total graph."""
    cfg = cfg or SolverConfig()
    _require_no_isolated(G)
    _check_cap(G, cfg.element_cap)
    t0 = time.perf_counter()
    T = total_graph(G)
    mask, nodes = min_total_dominating_set(T.graph.adj, cfg)
    S = MixedSet(frozenset(T.labels[k] for k in iter_bits(mask)), G)
    _certify(is_tmds(G, S), "gamma_tm")
    return SolveResult(len(S), S, Method.TOTAL_GRAPH_REDUCTION, nodes, time.perf_counter() - t0)


def _smallest_dominating(masks, full: int, start: int, closed: bool) -> tuple[int, int, int]:
    """First subset (by size, then lexicographic) whose (open or closed)
    neighborhood union is ``full``. Returns ``(k, mask, tried)``."""
    N = len(masks)
    tried = 0
    for k in range(start, N + 1):
        for combo in combinations(range(N), k):
            tried += 1
            dom = 0
            for w in combo:
                dom |= masks[w]
            if closed:
                for w in combo:
                    dom |= 1 << w
            if dom == full:
                mask = 0
                for w in combo:
                    mask |= 1 << w
                return k, mask, tried
    raise AssertionError("unreachable")


def gamma_tm_direct(G: Graph, cfg: Optional[SolverConfig] = None) -> SolveResult:
    """Total mixed domination number by exhaustive search over subsets of V u E."""
    cfg = cfg or SolverConfig()
    _require_no_isolated(G)
    _check_cap(G, cfg.direct_cap)
    t0 = time.perf_counter()
    masks = mixed_masks(G)
    full = (1 << len(masks)) - 1
    k, mask, tried = _smallest_dominating(masks, full, 2, closed=False)
    S = mask_to_mixed_set(G, mask)
    _certify(is_tmds(G, S), "gamma_tm_direct")
    return SolveResult(k, S, Method.BRUTE_FORCE, tried, time.perf_counter() - t0)


def gamma_m(G: Graph, cfg: Optional[SolverConfig] = None) -> SolveResult:
    """Mixed domination number: members of the set need not be dominated."""
    cfg = cfg or SolverConfig()
    if G.n == 0:
        raise EmptyGraph("graph has no vertices")
    _check_cap(G, cfg.direct_cap)
    t0 = time.perf_counter()
    masks = mixed_masks(G)
    full = (1 << len(masks)) - 1
    k, mask, tried = _smallest_dominating(masks, full, 1, closed=True)
    S = mask_to_mixed_set(G, mask)
    _certify(is_mds(G, S), "gamma_m")
    return SolveResult(k, S, Method.BRUTE_FORCE, tried, time.perf_counter() - t0)


def enumerate_min_tmds(G: Graph, cfg: Optional[SolverConfig] = None) -> list[MixedSet]:
    """Every minimum TMDS of ``G`` (brute force; small graphs only)."""
    value = gamma_tm(G, cfg).value
    masks = mixed_masks(G)
    full = (1 << len(masks)) - 1
    out = []
    for combo in combinations(range(len(masks)), value):
        dom = 0
        for w in combo:
            dom |= masks[w]
        if dom == full:
            out.append(mask_to_mixed_set(G, _vertex_mask(combo)))
    return out


# ---------------------------------------------------------------------------
# auxiliary parameters for the refined upper bound


def min_vertex_cover(G: Graph) -> SolveResult:
    """Exact minimum vertex cover by edge branching."""
    t0 = time.perf_counter()
    best = [G.n, (1 << G.n) - 1]
    nodes = 0

    def branch(cover: int, size: int) -> None:
        nonlocal nodes
        nodes += 1
        if size >= best[0]:
            return
        for i, j in G.edges:
            if not (cover >> i & 1 or cover >> j & 1):
                break
        else:
            best[0], best[1] = size, cover
            return
        branch(cover | 1 << i, size + 1)
        branch(cover | 1 << j, size + 1)

    if G.m == 0:
        best = [0, 0]
    else:
        branch(0, 0)
    cover = frozenset(iter_bits(best[1]))
    _certify(all(i in cover or j in cover for i, j in G.edges), "vertex cover")
    return SolveResult(best[0], cover, Method.DIRECT_SEARCH, nodes, time.perf_counter() - t0)


def enumerate_min_tds(G: Graph, cfg: Optional[SolverConfig] = None) -> list[frozenset]:
    """All total dominating sets of minimum size, in lexicographic order."""
    value = gamma_t(G, cfg).value
    full = (1 << G.n) - 1
    out = []
    for combo in combinations(range(G.n), value):
        dom = 0
        for v in combo:
            dom |= G.adj[v]
        if dom == full:
            out.append(frozenset(combo))
    return out


def beta_param(G: Graph, cfg: Optional[SolverConfig] = None) -> int:
    """min over minimum TDSs S of beta(G - S)."""
    return min(min_vertex_cover(delete_vertices(G, S)).value for S in enumerate_min_tds(G, cfg))


def maximal_cliques(G: Graph) -> list[int]:
    """All maximal cliques as vertex bitmasks (Bron-Kerbosch with pivoting)."""
    out = []
    adj = G.adj

    def bk(R: int, P: int, X: int) -> None:
        if not P and not X:
            out.append(R)
            return
        pivot = max(iter_bits(P | X), key=lambda u: (adj[u] & P).bit_count())
        for v in iter_bits(P & ~adj[pivot]):
            bk(R | 1 << v, P & adj[v], X & adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    if G.n:
        bk(0, (1 << G.n) - 1, 0)
    return sorted(out)


def _min_transversal(n: int, cliques: list[int]) -> int:
    for k in range(0, n + 1):
        for combo in combinations(range(n), k):
            mask = _vertex_mask(combo)
            if all(c & mask for c in cliques):
                return k
    raise AssertionError("unreachable")


def _max_disjoint(cliques: list[int]) -> int:
    best = 0

    def grow(start: int, used: int, count: int) -> None:
        nonlocal best
        best = max(best, count)
        if count + len(cliques) - start <= best:
            return
        for k in range(start, len(cliques)):
            if not cliques[k] & used:
                grow(k + 1, used | cliques[k], count + 1)

    grow(0, 0, 0)
    return best


def clique_params(H: Graph, D) -> tuple[int, int]:
    """``(transversal, packing)`` for the residual ``H - D``.

    ``transversal`` is the fewest vertices meeting every maximal clique of
    ``H - D``; ``packing`` is the largest number of pairwise vertex-disjoint
    maximal cliques of ``H - D``.
    """
    R = delete_vertices(H, D)
    if R.n == 0:
        raise EmptyResidual("H - D has no vertices")
    cliques = maximal_cliques(R)
    return _min_transversal(R.n, cliques), _max_disjoint(cliques)


def clique_transversal_param(H: Graph, D) -> int:
    return clique_params(H, D)[0]


def c_line_params(G: Graph, cfg: Optional[SolverConfig] = None) -> tuple[int, int]:
    """min over minimum TDSs D of L(G) of ``clique_params(L(G), D)``, componentwise.

    An empty residual counts as 0 for both readings.
    """
    L = line_graph(G).graph
    best_t = best_p = None
    for D in enumerate_min_tds(L, cfg):
        try:
            t, p = clique_params(L, D)
        except EmptyResidual:
            t = p = 0
        best_t = t if best_t is None else min(best_t, t)
        best_p = p if best_p is None else min(best_p, p)
    return best_t, best_p


def c_line_param(G: Graph, cfg: Optional[SolverConfig] = None) -> int:
    return c_line_params(G, cfg)[0]


def greedy_tmds(G: Graph) -> MixedSet:
    """A (not necessarily minimum) TMDS; the branch-and-bound upper-bound seed."""
    _require_no_isolated(G)
    T = total_graph(G)
    mask = greedy_tds(T.graph.adj)
    S = MixedSet(frozenset(T.labels[k] for k in iter_bits(mask)), G)
    _certify(is_tmds(G, S), "greedy_tmds")
    return S


__all__ = [
    "Method",
    "SolverConfig",
    "SolveResult",
    "is_tds",
    "is_mds",
    "is_tmds",
    "gamma_t",
    "gamma_t_bruteforce",
    "gamma_tm",
    "gamma_tm_direct",
    "gamma_m",
    "enumerate_min_tmds",
    "min_vertex_cover",
    "enumerate_min_tds",
    "beta_param",
    "maximal_cliques",
    "clique_params",
    "clique_transversal_param",
    "c_line_params",
    "c_line_param",
    "greedy_tmds",
    "min_total_dominating_set",
]
