"""Exact total mixed domination on small graphs: solvers, closed forms, and a theorem-check harness."""

from .constructors import FamilySpec, corona2, line_graph, make_family, total_graph
from .errors import DomlabError
from .graph import EdgeElement, Graph, MixedSet, Vertex, build_graph
from .solvers import SolverConfig, gamma_m, gamma_t, gamma_tm, gamma_tm_direct, is_tds, is_tmds
from .verify import CorpusSpec, run_corpus, verify_all

__version__ = "0.1.0"

__all__ = [
    "CorpusSpec",
    "DomlabError",
    "EdgeElement",
    "FamilySpec",
    "Graph",
    "MixedSet",
    "SolverConfig",
    "Vertex",
    "build_graph",
    "corona2",
    "gamma_m",
    "gamma_t",
    "gamma_tm",
    "gamma_tm_direct",
    "is_tds",
    "is_tmds",
    "line_graph",
    "make_family",
    "run_corpus",
    "total_graph",
    "verify_all",
]
