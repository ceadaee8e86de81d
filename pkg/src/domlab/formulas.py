"""Closed forms and constructive witnesses for the resolved graph families.

Constructions are described with 1-indexed labels ``v_1..v_n``; everything
here is translated to 0-indexed ids. Wheels keep the hub at 0 and the rim at
1..n, which coincides with the usual ``v_0..v_n`` labelling of wheels.
Every witness is validated before it is returned.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .constructors import (
    FamilySpec,
    complete_graph,
    line_graph,
    make_family,
    wheel,
)
from .errors import ConstructionFailed, InvalidParams, NotATree, NotHamiltonianPath, UnsupportedFamily
from .graph import (
    Graph,
    MixedSet,
    bfs_distances,
    is_hamiltonian_path,
    is_tree,
    normalize_edge,
)
from .solvers import is_tds, is_tmds


@dataclass(frozen=True)
class FormulaResult:
    value: int
    witness: object  # MixedSet, or a frozenset of line-graph vertex ids
    family: FamilySpec | None
    construction_tag: str
    graph: Graph | None = None


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# offsets against 4*ceil(n/7), by n mod 7; the two tables differ at residues 4 and 5
_PATH_OFFSET = {0: 0, 1: -3, 2: -2, 3: -2, 4: -2, 5: -1, 6: 0}
_CYCLE_OFFSET = {0: 0, 1: -3, 2: -2, 3: -2, 4: -1, 5: 0, 6: 0}


def _two_thirds(n: int) -> int:
    return 2 * n // 3 + (0 if n % 3 == 0 else 1)


def gamma_tm_case(spec: FamilySpec) -> tuple[int, str]:
    """Closed-form gamma_tm together with a short description of the case used."""
    f, p = spec.family, spec.params
    if f in ("path", "cycle"):
        n = p[0]
        r = n % 7
        off = (_PATH_OFFSET if f == "path" else _CYCLE_OFFSET)[r]
        case = f"4*ceil(n/7){off:+d}" if off else "4*ceil(n/7)"
        return 4 * _ceil_div(n, 7) + off, f"{case}, n = {r} (mod 7)"
    if f == "complete":
        n = p[0]
        case = "floor(2n/3)" if n % 3 == 0 else "floor(2n/3)+1"
        return _two_thirds(n), f"{case}, n = {n % 3} (mod 3)"
    if f == "bipartite":
        return p[0] + 1, "m+1"
    if f == "wheel":
        return _ceil_div(p[0], 2) + 1, "ceil(n/2)+1"
    if f == "double-star":
        # a min-TDS (center and middles) whose complement (the leaves) is independent
        return p[0] + 1, "n+1 (gamma_t = gamma_tm)"
    if f == "corona2":
        return 2 * spec.base.n, "2n"
    raise UnsupportedFamily(f)


def gamma_tm_formula(spec: FamilySpec) -> int:
    return gamma_tm_case(spec)[0]


def _path_cycle_witness(n: int, cyclic: bool) -> tuple[list[int], list[tuple[int, int]]]:
    """Blocks of seven (two vertices, two edges) plus the residue tail, 0-indexed."""
    verts, edges = [], []
    for i in range(n // 7):
        b = 7 * i
        verts += [b + 1, b + 2]
        edges += [(b + 4, b + 5), (b + 5, b + 6)]
    r = n % 7
    # tails below use the 1-indexed positions v_{n-k} -> n-k-1
    if r == 1:
        edges.append((n - 2, n - 1))
    elif r in (2, 3):
        verts += [n - 2, n - 1]
    elif r == 4:
        verts += [n - 3, n - 2] + ([n - 1] if cyclic else [])
    elif r == 5:
        verts += [n - 4, n - 3, n - 2] + ([n - 1] if cyclic else [])
    elif r == 6:
        verts += [n - 5, n - 4]
        edges += [(n - 3, n - 2), (n - 2, n - 1)]
    return verts, edges


def _edge_chain(count: int) -> list[tuple[int, int]]:
    """Edges {v_{3i+1}v_{3i+2}, v_{3i+2}v_{3i+3}} for i < count, as 0-indexed position pairs."""
    out = []
    for i in range(count):
        out += [(3 * i, 3 * i + 1), (3 * i + 1, 3 * i + 2)]
    return out


def _complete_edges(n: int) -> list[tuple[int, int]]:
    k = n // 3
    edges = _edge_chain(k)
    if n % 3 >= 1:
        edges.append((3 * k - 1, 3 * k))
    if n % 3 == 2:
        edges.append((3 * k, 3 * k + 1))
    return edges


def gamma_tm_witness(spec: FamilySpec) -> FormulaResult:
    """Explicit minimum TMDS for a family instance, validated before return."""
    G = make_family(spec)
    f, p = spec.family, spec.params
    verts: list[int] = []
    edges: list[tuple[int, int]] = []
    if f in ("path", "cycle"):
        verts, edges = _path_cycle_witness(p[0], f == "cycle")
        tag = "blocks v_{7i+2},v_{7i+3},e_{(7i+5)(7i+6)},e_{(7i+6)(7i+7)} + residue tail"
    elif f == "complete":
        n = p[0]
        if n == 2:
            verts, tag = [0, 1], "both vertices of K_2"
        else:
            edges = _complete_edges(n)
            tag = "edge chain e_{(3i+1)(3i+2)}, e_{(3i+2)(3i+3)} + residue tail"
    elif f == "bipartite":
        m = p[0]
        verts, tag = list(range(m)) + [m], "smaller part plus one vertex of the other part"
    elif f == "wheel":
        n = p[0]
        verts = [0] + [2 * i - 1 for i in range(1, _ceil_div(n, 2) + 1)]
        tag = "hub plus odd rim vertices"
    elif f == "double-star":
        verts, tag = list(range(p[0] + 1)), "center and middle vertices"
    elif f == "corona2":
        verts, tag = list(range(2 * spec.base.n)), "base vertices and path middles"
    else:
        raise UnsupportedFamily(f)
    S = MixedSet.of(G, verts, edges)
    value = gamma_tm_formula(spec)
    if len(S) != value or not is_tmds(G, S):
        raise ConstructionFailed(f"witness for {spec} failed validation", G, S)
    return FormulaResult(value, S, spec, tag, G)


def gamma_t_line_formula(family: str, n: int) -> FormulaResult:
    """gamma_t(L(K_n)) = floor(2n/3) for n >= 4; gamma_t(L(W_n)) = ceil(n/2) for n >= 3.

    The witness is a set of line-graph vertex ids (canonical edge positions).
    """
    if family == "complete":
        if n < 4:
            raise InvalidParams("line-graph formula for K_n needs n >= 4")
        G = complete_graph(n)
        value = 2 * n // 3
        chosen = _edge_chain(n // 3)
        if n % 3 == 2:
            chosen.append((n - 3, n - 2))
        tag = "edge chain over consecutive triples"
    elif family == "wheel":
        if n < 3:
            raise InvalidParams("line-graph formula for W_n needs n >= 3")
        G = wheel(n)
        value = _ceil_div(n, 2)
        chosen = [(0, 2 * i - 1) for i in range(1, value + 1)]
        tag = "spokes to odd rim vertices"
    else:
        raise UnsupportedFamily(family)
    L = line_graph(G)
    D = frozenset(G.edge_index(e) for e in chosen)
    if len(D) != value or not is_tds(L.graph, D):
        raise ConstructionFailed(f"line-graph witness for {family} {n} failed validation", L.graph, D)
    spec = FamilySpec(family, (n,))
    return FormulaResult(value, D, spec, tag, L.graph)


def hamiltonian_tmds(G: Graph, path: list[int]) -> FormulaResult:
    """TMDS of size floor(2n/3) (+1 unless 3 | n) made of edges along a Hamiltonian path."""
    if not is_hamiltonian_path(G, path):
        raise NotHamiltonianPath("given sequence is not a Hamiltonian path of G")
    n = G.n
    if n < 2:
        raise InvalidParams("needs n >= 2")
    if n == 2:
        S = MixedSet.of(G, [path[0]], [(path[0], path[1])])
    else:
        k = n // 3
        positions = _edge_chain(k)
        if n % 3 == 1:
            positions.append((n - 2, n - 1))
        elif n % 3 == 2:
            positions += [(n - 3, n - 2), (n - 2, n - 1)]
        S = MixedSet.of(G, (), [normalize_edge(path[a], path[b]) for a, b in positions])
    if len(S) != _two_thirds(n) or not is_tmds(G, S):
        raise ConstructionFailed("Hamiltonian-path construction failed validation", G, S)
    return FormulaResult(len(S), S, None, f"edge chain along path, n = {n % 3} (mod 3)", G)


def tree_tmds(T: Graph) -> FormulaResult:
    """TMDS of a tree of order n >= 3 with at most floor(2n/3) elements.

    Vertices are classed by distance mod 3 from the lowest-indexed leaf; the
    largest class is dropped (lowest class on ties). A kept leaf whose
    neighbor was dropped is swapped for that neighbor.
    """
    if not is_tree(T):
        raise NotATree("input is not a tree")
    if T.n < 3:
        raise InvalidParams("tree construction needs n >= 3")
    root = min(v for v in range(T.n) if T.degree(v) == 1)
    cls = [d % 3 for d in bfs_distances(T, root)]
    sizes = Counter(cls)
    dropped = max(range(3), key=lambda c: (sizes[c], -c))
    kept = {v for v in range(T.n) if cls[v] != dropped}
    chosen = set()
    for v in kept:
        if T.degree(v) == 1:
            (w,) = T.neighbors(v)
            chosen.add(v if w in kept else w)
        else:
            chosen.add(v)
    S = MixedSet.of(T, chosen)
    if len(S) > 2 * T.n // 3 or not is_tmds(T, S):
        raise ConstructionFailed("distance-mod-3 tree construction failed validation", T, S)
    return FormulaResult(len(S), S, None, f"distance mod 3 from leaf {root}, class {dropped} dropped", T)


def path_cycle_relation(n: int) -> bool:
    """Whether the cycle and path closed forms differ by exactly the stated amount."""
    if n < 3:
        raise InvalidParams("needs n >= 3")
    p = gamma_tm_formula(FamilySpec("path", (n,)))
    c = gamma_tm_formula(FamilySpec("cycle", (n,)))
    return c == p + (1 if n % 7 in (4, 5) else 0)


def corona_witness(G: Graph) -> FormulaResult:
    return gamma_tm_witness(FamilySpec("corona2", base=G))


__all__ = [
    "FormulaResult",
    "gamma_tm_case",
    "gamma_tm_formula",
    "gamma_tm_witness",
    "gamma_t_line_formula",
    "hamiltonian_tmds",
    "tree_tmds",
    "path_cycle_relation",
    "corona_witness",
]
