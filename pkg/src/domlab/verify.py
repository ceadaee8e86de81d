"""Theorem-by-theorem checks and the corpus runner.

Each ``verify_*`` function evaluates one statement on one graph with exact
values and returns a :class:`TheoremReport`. :func:`run_corpus` applies a set
of checks to every graph of a corpus and aggregates the reports in a
deterministic order (graph digest, then theorem id).
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Optional

from . import corpus as _corpus
from .constructors import FamilySpec, corona2, line_graph, make_family, total_graph
from .errors import CapExceeded, ConstructionFailed, TooLarge
from .formats import read_graphs
from .formulas import gamma_tm_case, gamma_tm_witness, hamiltonian_tmds, tree_tmds
from .graph import (
    HAMILTONIAN_CAP,
    Graph,
    MixedSet,
    build_graph,
    diameter,
    has_hamiltonian_path,
    is_connected,
    is_independent,
    is_tree,
)
from .solvers import (
    SolverConfig,
    beta_param,
    c_line_params,
    enumerate_min_tmds,
    gamma_t,
    gamma_tm,
    gamma_tm_direct,
    is_tds,
    is_tmds,
)

REPORT_VERSION = "1"
PASS, FAIL, SKIPPED = "Pass", "Fail", "Skipped"
# subset enumeration in the observation check is 2^n and 2^m
OBSERVATION_CAP = 16


@dataclass
class TheoremReport:
    theorem_id: str
    graph_digest: str
    status: str
    lhs: Any = None
    rhs: Any = None
    reason: Optional[str] = None
    witnesses: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)
    n: int = 0
    edges: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def graph(self) -> Graph:
        return build_graph(self.n, self.edges)

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        d["edges"] = [list(e) for e in self.edges]
        if not timing:
            d.pop("elapsed")
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "TheoremReport":
        d = dict(d)
        d["edges"] = [tuple(e) for e in d.get("edges", [])]
        return cls(**d)


def _report(theorem_id: str, G: Graph, ok: bool, **kw) -> TheoremReport:
    return TheoremReport(theorem_id, _corpus.graph_digest(G), PASS if ok else FAIL,
                         n=G.n, edges=list(G.edges), **kw)


def _skip(theorem_id: str, G: Graph, reason: str) -> TheoremReport:
    return TheoremReport(theorem_id, _corpus.graph_digest(G), SKIPPED, reason=reason,
                         n=G.n, edges=list(G.edges))


def _precheck(theorem_id: str, G: Graph, cfg: SolverConfig, cap: Optional[int] = None):
    """Common preconditions: connected, delta >= 1, and within the size cap."""
    if G.n < 2 or not is_connected(G):
        return _skip(theorem_id, G, "precondition: connected graph with n >= 2 required")
    cap = cfg.element_cap if cap is None else cap
    if G.n + G.m > cap:
        return _skip(theorem_id, G, f"size cap: |V u E| = {G.n + G.m} > {cap}")
    return None


def _line_has_isolated(G: Graph) -> bool:
    # L(G) has an isolated vertex iff some edge touches no other edge
    return any(G.degree(i) == 1 and G.degree(j) == 1 for i, j in G.edges)


# ---------------------------------------------------------------------------
# individual checks


def verify_sandwich(G: Graph, cfg: Optional[SolverConfig] = None) -> TheoremReport:
    """max(gamma_t(G), gamma_t(L(G))) <= gamma_tm(G) <= gamma_t(G) + gamma_t(L(G))."""
    cfg = cfg or SolverConfig()
    tid = "sandwich"
    if (skip := _precheck(tid, G, cfg)):
        return skip
    if _line_has_isolated(G):
        return _skip(tid, G, "precondition: L(G) has an isolated vertex, gamma_t(L(G)) undefined")
    t = gamma_t(G, cfg)
    tl = gamma_t(line_graph(G).graph, cfg)
    tm = gamma_tm(G, cfg)
    lo, hi = max(t.value, tl.value), t.value + tl.value
    return _report(
        tid, G, lo <= tm.value <= hi, lhs=tm.value, rhs=[lo, hi],
        witnesses={"gamma_tm": tm.witness.display()},
        notes={"gamma_t": t.value, "gamma_t_line": tl.value,
               "lower_tight": tm.value == lo, "upper_tight": tm.value == hi},
    )


def verify_total_graph_identity(G: Graph, cfg: Optional[SolverConfig] = None) -> TheoremReport:
    """gamma_tm by direct subset search equals gamma_t of the total graph."""
    cfg = cfg or SolverConfig()
    tid = "total-graph-identity"
    if (skip := _precheck(tid, G, cfg, cap=cfg.direct_cap)):
        return skip
    direct = gamma_tm_direct(G, cfg)
    T = total_graph(G)
    via_t = gamma_t(T.graph, cfg)
    return _report(tid, G, direct.value == via_t.value, lhs=direct.value, rhs=via_t.value,
                   witnesses={"direct": direct.witness.display(),
                              "total_graph": sorted(str(T.labels[k]) for k in via_t.witness)})


def verify_upper_min(G: Graph, cfg: Optional[SolverConfig] = None) -> TheoremReport:
    """gamma_tm <= min(gamma_t(L) + c, gamma_t + beta), c read as a clique transversal.

    The clique-packing reading of c is reported alongside but does not decide the status.
    """
    cfg = cfg or SolverConfig()
    tid = "upper-min"
    if (skip := _precheck(tid, G, cfg)):
        return skip
    if _line_has_isolated(G):
        return _skip(tid, G, "precondition: L(G) has an isolated vertex, gamma_t(L(G)) undefined")
    tm = gamma_tm(G, cfg).value
    t = gamma_t(G, cfg).value
    tl = gamma_t(line_graph(G).graph, cfg).value
    beta = beta_param(G, cfg)
    c_trans, c_pack = c_line_params(G, cfg)
    bound = min(tl + c_trans, t + beta)
    bound_pack = min(tl + c_pack, t + beta)
    return _report(
        tid, G, tm <= bound, lhs=tm, rhs=bound,
        notes={"gamma_t": t, "gamma_t_line": tl, "beta": beta,
               "c_transversal": c_trans, "c_disjoint_cliques": c_pack,
               "bound_disjoint_cliques_reading": bound_pack,
               "holds_disjoint_cliques_reading": tm <= bound_pack,
               "equality": tm == bound},
    )


def verify_diam(G: Graph, cfg: Optional[SolverConfig] = None) -> TheoremReport:
    """gamma_tm = 2 implies diam <= 3; the converse is recorded, not asserted."""
    cfg = cfg or SolverConfig()
    tid = "diam-implication"
    if (skip := _precheck(tid, G, cfg)):
        return skip
    tm = gamma_tm(G, cfg).value
    d = diameter(G)
    converse = tm == 2 or d > 3
    notes = {"converse_holds": converse}
    if not converse:
        notes["converse_note"] = f"converse fails here: diam = {d} <= 3 but gamma_tm = {tm}"
    return _report(tid, G, not (tm == 2 and d > 3), lhs=tm, rhs=d, notes=notes)


def verify_tree_iff(T: Graph, cfg: Optional[SolverConfig] = None) -> TheoremReport:
    """For trees: gamma_tm = 2 iff diam <= 3."""
    cfg = cfg or SolverConfig()
    tid = "tree-iff"
    if not is_tree(T) or T.n < 2:
        return _skip(tid, T, "precondition: tree with n >= 2 required")
    if (skip := _precheck(tid, T, cfg)):
        return skip
    tm = gamma_tm(T, cfg).value
    d = diameter(T)
    return _report(tid, T, (tm == 2) == (d <= 3), lhs=tm, rhs=d)


def verify_tree_bound(T: Graph, cfg: Optional[SolverConfig] = None) -> TheoremReport:
    """For trees with n >= 3: gamma_tm <= floor(2n/3), and the distance-mod-3 construction validates."""
    cfg = cfg or SolverConfig()
    tid = "tree-2n3"
    if not is_tree(T) or T.n < 3:
        return _skip(tid, T, "precondition: tree with n >= 3 required")
    if (skip := _precheck(tid, T, cfg)):
        return skip
    tm = gamma_tm(T, cfg).value
    bound = 2 * T.n // 3
    notes, witnesses = {}, {}
    try:
        built = tree_tmds(T)
        witnesses["construction"] = built.witness.display()
        notes["construction_size"] = built.value
        constructed = True
    except ConstructionFailed as exc:
        notes["construction_failed"] = str(exc)
        if exc.candidate is not None:
            witnesses["failed_candidate"] = exc.candidate.display()
        constructed = False
    return _report(tid, T, tm <= bound and constructed, lhs=tm, rhs=bound,
                   witnesses=witnesses, notes=notes)


def verify_tree(T: Graph, cfg: Optional[SolverConfig] = None) -> TheoremReport:
    """Both tree statements on one tree, as a single report."""
    a = verify_tree_iff(T, cfg)
    b = verify_tree_bound(T, cfg) if T.n >= 3 else None
    parts = [a] + ([b] if b else [])
    if any(r.status == SKIPPED for r in parts):
        reasons = "; ".join(r.reason for r in parts if r.reason)
        return _skip("tree", T, reasons)
    rep = _report("tree", T, all(r.passed for r in parts), lhs=a.lhs,
                  rhs={"diameter": a.rhs, "bound": b.rhs if b else None})
    rep.notes = {r.theorem_id: r.status for r in parts}
    if b:
        rep.notes.update(b.notes)
        rep.witnesses = b.witnesses
    return rep


def verify_corona(G: Graph, cfg: Optional[SolverConfig] = None) -> TheoremReport:
    """gamma_tm(G o P_2) = 2 n(G) for the base graph ``G``."""
    cfg = cfg or SolverConfig()
    tid = "corona-2n"
    if G.n < 2 or not is_connected(G):
        return _skip(tid, G, "precondition: connected base graph with n >= 2 required")
    H = corona2(G).graph
    if H.n + H.m > cfg.element_cap:
        return _skip(tid, G, f"size cap: corona has |V u E| = {H.n + H.m} > {cfg.element_cap}")
    tm = gamma_tm(H, cfg)
    return _report(tid, G, tm.value == 2 * G.n, lhs=tm.value, rhs=2 * G.n,
                   witnesses={"gamma_tm": tm.witness.display()})


def verify_ham_bound(G: Graph, cfg: Optional[SolverConfig] = None) -> TheoremReport:
    """With a Hamiltonian path: gamma_tm <= floor(2n/3) (+1 unless 3 | n)."""
    cfg = cfg or SolverConfig()
    tid = "ham-bound"
    if (skip := _precheck(tid, G, cfg)):
        return skip
    if G.n > HAMILTONIAN_CAP:
        return _skip(tid, G, f"size cap: Hamiltonian check limited to n <= {HAMILTONIAN_CAP}")
    ok, path = has_hamiltonian_path(G)
    if not ok:
        return _skip(tid, G, "precondition: no Hamiltonian path")
    tm = gamma_tm(G, cfg).value
    bound = 2 * G.n // 3 + (0 if G.n % 3 == 0 else 1)
    notes, witnesses = {"path": path}, {}
    try:
        built = hamiltonian_tmds(G, path)
        witnesses["construction"] = built.witness.display()
        constructed = built.value == bound
    except ConstructionFailed as exc:
        notes["construction_failed"] = str(exc)
        constructed = False
    return _report(tid, G, tm <= bound and constructed, lhs=tm, rhs=bound,
                   witnesses=witnesses, notes=notes)


def _subsets(n: int):
    for mask in range(1 << n):
        yield [k for k in range(n) if mask >> k & 1]


def verify_observation(G: Graph, cfg: Optional[SolverConfig] = None) -> TheoremReport:
    """Three equivalences about vertex-only and edge-only candidate sets.

    1. S subset of E is a TDS of L(G) iff every edge shares an endpoint with a
       different edge of S (standard reading; the literal wording is only tallied).
    2. A TDS S of L(G) is a TMDS of G iff its edges cover every vertex.
    3. A TDS S of G is a TMDS of G iff V - S is independent.
    """
    cfg = cfg or SolverConfig()
    tid = "obs-2.1"
    if (skip := _precheck(tid, G, cfg)):
        return skip
    if G.n > OBSERVATION_CAP or G.m > OBSERVATION_CAP:
        return _skip(tid, G, f"size cap: subset enumeration limited to n, m <= {OBSERVATION_CAP}")
    bad = {"bullet1": 0, "bullet2": 0, "bullet3": 0}
    literal_disagrees = 0
    checked = {"bullet1": 0, "bullet2": 0, "bullet3": 0}
    L = line_graph(G).graph
    edges = G.edges
    for S in _subsets(G.m):
        checked["bullet1"] += 1
        tds_l = is_tds(L, S)
        standard = all(
            any(k != e and set(edges[k]) & set(edges[e]) for k in S) for e in range(G.m)
        )
        literal = bool(S)
        if tds_l != standard:
            bad["bullet1"] += 1
        if tds_l != literal:
            literal_disagrees += 1
        if tds_l:
            checked["bullet2"] += 1
            M = MixedSet.of(G, (), [edges[k] for k in S])
            covered = {v for k in S for v in edges[k]}
            if is_tmds(G, M) != (covered == set(range(G.n))):
                bad["bullet2"] += 1
    for S in _subsets(G.n):
        if not is_tds(G, S):
            continue
        checked["bullet3"] += 1
        rest = [v for v in range(G.n) if v not in S]
        if is_tmds(G, MixedSet.of(G, S)) != is_independent(G, rest):
            bad["bullet3"] += 1
    return _report(tid, G, not any(bad.values()), lhs=sum(bad.values()), rhs=0,
                   notes={"violations": bad, "sets_checked": checked,
                          "literal_bullet1_disagreements": literal_disagrees})


def verify_lemma_edge_lower(G: Graph, cfg: Optional[SolverConfig] = None) -> TheoremReport:
    """For every minimum TMDS S: |S n E| >= floor(2|A|/3) (+1 unless 3 | |A|),
    where A holds the vertices outside S covered by an edge of S."""
    cfg = cfg or SolverConfig()
    tid = "lemma-edge-lower"
    if (skip := _precheck(tid, G, cfg, cap=cfg.direct_cap)):
        return skip
    sets = enumerate_min_tmds(G, cfg)
    violations = []
    for S in sets:
        inside = S.vertices
        A = {v for e in S.edges for v in e if v not in inside}
        a = len(A)
        need = 2 * a // 3 + (0 if a % 3 == 0 else 1)
        if len(S.edges) < need:
            violations.append(S.display())
    return _report(tid, G, not violations, lhs=len(violations), rhs=0,
                   witnesses={"violations": violations[:5]} if violations else {},
                   notes={"min_sets_checked": len(sets)})


def verify_formula(spec: FamilySpec, cfg: Optional[SolverConfig] = None) -> TheoremReport:
    """Closed form versus exact solve, plus validation of the constructive witness."""
    cfg = cfg or SolverConfig()
    tid = f"formula:{spec.family}"
    G = make_family(spec)
    if G.n + G.m > cfg.element_cap:
        return _skip(tid, G, f"size cap: |V u E| = {G.n + G.m} > {cfg.element_cap}")
    value, case = gamma_tm_case(spec)
    exact = gamma_tm(G, cfg)
    try:
        built = gamma_tm_witness(spec)
        witness_ok = True
        witnesses = {"construction": built.witness.display(), "solver": exact.witness.display()}
    except ConstructionFailed:
        witness_ok = False
        witnesses = {"solver": exact.witness.display()}
    return _report(tid, G, exact.value == value and witness_ok, lhs=exact.value, rhs=value,
                   witnesses=witnesses, notes={"case": case, "params": list(spec.params)})


CHECKS: dict[str, Callable[..., TheoremReport]] = {
    "sandwich": verify_sandwich,
    "total-graph-identity": verify_total_graph_identity,
    "upper-min": verify_upper_min,
    "diam-implication": verify_diam,
    "tree-iff": verify_tree_iff,
    "tree-2n3": verify_tree_bound,
    "corona-2n": verify_corona,
    "ham-bound": verify_ham_bound,
    "obs-2.1": verify_observation,
    "lemma-edge-lower": verify_lemma_edge_lower,
}
TREE_CHECKS = ("tree-iff", "tree-2n3")


def run_check(theorem_id: str, G: Graph, cfg: Optional[SolverConfig] = None) -> TheoremReport:
    t0 = time.perf_counter()
    try:
        fn = CHECKS[theorem_id]
    except KeyError:
        raise ValueError(f"unknown check {theorem_id!r}; known: {', '.join(CHECKS)}") from None
    try:
        rep = fn(G, cfg)
    except TooLarge as exc:
        rep = _skip(theorem_id, G, f"size cap: {exc}")
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_all(G: Graph, checks: Iterable[str] = tuple(CHECKS),
               cfg: Optional[SolverConfig] = None) -> list[TheoremReport]:
    return [run_check(c, G, cfg) for c in checks]


def replay(report: dict | TheoremReport, cfg: Optional[SolverConfig] = None) -> TheoremReport:
    """Re-run a single check from the edge list embedded in a report."""
    if isinstance(report, dict):
        report = TheoremReport.from_dict(report)
    return run_check(report.theorem_id, report.graph(), cfg)


# ---------------------------------------------------------------------------
# corpus runner


@dataclass(frozen=True)
class CorpusSpec:
    """Which graphs to check and how.

    ``mode`` is ``"exhaustive"`` (connected graphs, 2 <= n <= max_n),
    ``"trees"`` (all trees, Pruefer enumeration), ``"random-trees"``,
    ``"random-connected"`` or ``"file"``.
    """

    mode: str
    max_n: int = 0
    count: int = 0
    seed: int = 0
    edge_prob: float = 0.3
    path: Optional[str] = None
    dedup: bool = True
    checks: tuple = tuple(CHECKS)
    jobs: int = 1

    def __post_init__(self):
        object.__setattr__(self, "checks", tuple(self.checks))
        for c in self.checks:
            if c not in CHECKS:
                raise ValueError(f"unknown check {c!r}")
        if self.mode not in ("exhaustive", "trees", "random-trees", "random-connected", "file"):
            raise ValueError(f"unknown corpus mode {self.mode!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    @classmethod
    def exhaustive(cls, max_n: int, **kw) -> "CorpusSpec":
        return cls("exhaustive", max_n=max_n, **kw)

    @classmethod
    def trees(cls, max_n: int, **kw) -> "CorpusSpec":
        return cls("trees", max_n=max_n, **kw)

    @classmethod
    def random_trees(cls, count: int, max_n: int, seed: int, **kw) -> "CorpusSpec":
        return cls("random-trees", max_n=max_n, count=count, seed=seed, **kw)

    @classmethod
    def random_connected(cls, count: int, max_n: int, edge_prob: float, seed: int, **kw) -> "CorpusSpec":
        return cls("random-connected", max_n=max_n, count=count, edge_prob=edge_prob, seed=seed, **kw)

    @classmethod
    def from_file(cls, path, **kw) -> "CorpusSpec":
        return cls("file", path=str(path), **kw)

    def describe(self) -> dict:
        d = {"mode": self.mode, "checks": list(self.checks)}
        if self.mode in ("exhaustive", "trees"):
            d.update(max_n=self.max_n, dedup=self.dedup)
        elif self.mode == "random-trees":
            d.update(count=self.count, max_n=self.max_n, seed=self.seed)
        elif self.mode == "random-connected":
            d.update(count=self.count, max_n=self.max_n, edge_prob=self.edge_prob, seed=self.seed)
        else:
            d.update(path=self.path)
        return d


def corpus_graphs(spec: CorpusSpec, cfg: Optional[SolverConfig] = None) -> list[Graph]:
    cfg = cfg or SolverConfig()
    if spec.mode == "exhaustive":
        biggest = spec.max_n + spec.max_n * (spec.max_n - 1) // 2
        if biggest > cfg.element_cap:
            raise CapExceeded(f"K_{spec.max_n} has {biggest} elements > element cap {cfg.element_cap}")
        return _corpus.exhaustive_connected(spec.max_n, spec.dedup)
    if spec.mode == "trees":
        if 2 * spec.max_n - 1 > cfg.element_cap:
            raise CapExceeded(f"trees of order {spec.max_n} exceed the element cap")
        return [T for n in range(2, spec.max_n + 1) for T in _corpus.all_trees(n, spec.dedup)]
    if spec.mode == "random-trees":
        if 2 * spec.max_n - 1 > cfg.element_cap:
            raise CapExceeded(f"trees of order {spec.max_n} exceed the element cap")
        return _corpus.random_trees(spec.count, spec.max_n, spec.seed)
    if spec.mode == "random-connected":
        return _corpus.random_connected(spec.count, spec.max_n, spec.edge_prob, spec.seed)
    return read_graphs(spec.path)


def _check_graph(args) -> list[dict]:
    G, checks, cfg = args
    return [run_check(c, G, cfg).to_dict() for c in checks]


def run_corpus(spec: CorpusSpec, cfg: Optional[SolverConfig] = None) -> dict:
    """Run ``spec.checks`` on every corpus graph; returns the JSON-ready report."""
    cfg = cfg or SolverConfig()
    t0 = time.perf_counter()
    graphs = corpus_graphs(spec, cfg)
    # duplicates (e.g. repeated random graphs) would only repeat identical reports
    unique = {}
    for G in graphs:
        unique.setdefault(_corpus.graph_digest(G), G)
    tasks = [(G, spec.checks, cfg) for G in unique.values()]
    if spec.jobs > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            chunks = list(pool.map(_check_graph, tasks, chunksize=4))
    else:
        chunks = [_check_graph(t) for t in tasks]
    results = sorted((r for chunk in chunks for r in chunk),
                     key=lambda r: (r["graph_digest"], r["theorem_id"]))
    return build_report(results, spec.describe(), graphs=len(graphs),
                        elapsed=time.perf_counter() - t0)


def build_report(results: list[dict], corpus: dict, graphs: int = 0, elapsed: float = 0.0) -> dict:
    summary = {"pass": 0, "fail": 0, "skipped": 0}
    by_theorem: dict[str, dict] = {}
    for r in results:
        key = r["status"].lower()
        summary[key] += 1
        by_theorem.setdefault(r["theorem_id"], {"pass": 0, "fail": 0, "skipped": 0})[key] += 1
    return {
        "version": REPORT_VERSION,
        "corpus": corpus,
        "results": results,
        "summary": summary,
        "by_theorem": dict(sorted(by_theorem.items())),
        "graphs": graphs,
        "elapsed": elapsed,
    }


def report_digest(report: dict) -> str:
    """Hash of a report with every timing field removed."""
    stripped = {k: v for k, v in report.items() if k != "elapsed"}
    stripped["results"] = [{k: v for k, v in r.items() if k != "elapsed"} for r in report["results"]]
    blob = json.dumps(stripped, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


def failures(report: dict) -> list[dict]:
    return [r for r in report["results"] if r["status"] == FAIL]


# ---------------------------------------------------------------------------
# exploratory ratio scan


def alpha_scan(source, cfg: Optional[SolverConfig] = None) -> dict:
    """Smallest observed gamma_tm / gamma_t over a corpus (exploratory, no claim)."""
    cfg = cfg or SolverConfig()
    graphs = corpus_graphs(source, cfg) if isinstance(source, CorpusSpec) else list(source)
    rows = []
    for G in graphs:
        if G.n < 2 or not is_connected(G) or G.n + G.m > cfg.element_cap:
            continue
        t = gamma_t(G, cfg).value
        tm = gamma_tm(G, cfg).value
        r = Fraction(tm, t)
        rows.append({"digest": _corpus.graph_digest(G), "n": G.n, "m": G.m,
                     "gamma_t": t, "gamma_tm": tm, "ratio": str(r), "ratio_float": float(r),
                     "edges": [list(e) for e in G.edges]})
    rows.sort(key=lambda row: (Fraction(row["ratio"]), row["n"], row["digest"]))
    best = rows[0] if rows else None
    return {"graphs": len(rows), "min_ratio": best["ratio"] if best else None,
            "extremal": best, "rows": rows}


__all__ = [
    "TheoremReport",
    "CorpusSpec",
    "CHECKS",
    "TREE_CHECKS",
    "PASS",
    "FAIL",
    "SKIPPED",
    "verify_sandwich",
    "verify_total_graph_identity",
    "verify_upper_min",
    "verify_diam",
    "verify_tree",
    "verify_tree_iff",
    "verify_tree_bound",
    "verify_corona",
    "verify_ham_bound",
    "verify_observation",
    "verify_lemma_edge_lower",
    "verify_formula",
    "run_check",
    "verify_all",
    "replay",
    "corpus_graphs",
    "run_corpus",
    "build_report",
    "report_digest",
    "failures",
    "alpha_scan",
]
