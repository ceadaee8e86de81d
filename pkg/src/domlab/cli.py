"""Command-line interface.

Exit codes: 0 on success (every check passed), 1 if any check failed,
2 on usage, parse, or precondition errors.

Graph inputs are a file path (edge list or graph6 lines), ``-`` for stdin,
``g6:<string>`` for an inline graph6 string, or a family shorthand such as
``cycle:11``, ``wheel:5`` or ``bipartite:3,3``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .constructors import FAMILIES, FamilySpec, make_family
from .errors import DomlabError
from .formats import (
    encode_graph6,
    format_edge_list,
    format_witness_file,
    parse_graph6,
    parse_witness_file,
    read_graph,
    read_graphs,
    to_dot,
)
from .formulas import gamma_t_line_formula, gamma_tm_case, gamma_tm_witness
from .graph import Graph, diameter
from .solvers import SolverConfig, gamma_m, gamma_t, gamma_tm, min_vertex_cover
from .verify import (
    CHECKS,
    FAIL,
    CorpusSpec,
    alpha_scan,
    build_report,
    run_corpus,
    verify_all,
    verify_formula,
)

INVARIANTS = ("gamma-t", "gamma-tm", "gamma-m", "beta", "diameter")


def _family_spec(family: str, params: list[str]) -> FamilySpec:
    if family == "corona2":
        if len(params) != 1:
            raise DomlabError("corona2 takes one base-graph input")
        return FamilySpec("corona2", base=load_graph(params[0]))
    try:
        values = tuple(int(p) for p in params)
    except ValueError:
        raise DomlabError(f"{family} parameters must be integers, got {params}") from None
    return FamilySpec(family, values)


def load_graph(source: str) -> Graph:
    if source.startswith("g6:"):
        return parse_graph6(source[3:])
    family, sep, rest = source.partition(":")
    if sep and family in FAMILIES and not Path(source).exists():
        return make_family(_family_spec(family, rest.split(",")))
    return read_graph(source)


def _witness_text(S) -> str:
    if isinstance(S, frozenset):
        return "{" + ", ".join(f"v_{v + 1}" for v in sorted(S)) + "}"
    return str(S)


def cmd_compute(args) -> int:
    G = load_graph(args.input)
    cfg = _cfg(args)
    if args.invariant == "diameter":
        print(f"diameter = {diameter(G)}")
        return 0
    solver = {"gamma-t": gamma_t, "gamma-tm": gamma_tm, "gamma-m": gamma_m,
              "beta": lambda g, cfg: min_vertex_cover(g)}[args.invariant]
    res = solver(G, cfg)
    print(f"{args.invariant} = {res.value}")
    print(f"witness: {_witness_text(res.witness)}")
    print(f"method: {res.method.value}")
    print(f"nodes: {res.nodes_explored}")
    print(f"time: {res.elapsed:.4f}s")
    if args.witness_out:
        if isinstance(res.witness, frozenset):
            text = "".join(f"v {v}\n" for v in sorted(res.witness))
        else:
            text = format_witness_file(res.witness.elements)
        Path(args.witness_out).write_text(text)
    return 0


def cmd_witness(args) -> int:
    spec = _family_spec(args.family, args.params)
    res = gamma_tm_witness(spec)
    print(f"gamma-tm = {res.value}")
    print(f"witness: {res.witness}")
    print(f"construction: {res.construction_tag}")
    return 0


def cmd_formula(args) -> int:
    if args.family in ("line-complete", "line-wheel"):
        fam = args.family.split("-", 1)[1]
        res = gamma_t_line_formula(fam, int(args.params[0]))
        case = "floor(2n/3)" if fam == "complete" else "ceil(n/2)"
        print(f"gamma-t(L) = {res.value} (case: {case})")
        return 0
    spec = _family_spec(args.family, args.params)
    value, case = gamma_tm_case(spec)
    print(f"gamma-tm = {value} (case: {case})")
    if args.check:
        rep = verify_formula(spec)
        print(f"{rep.status}: exact solver gives {rep.lhs}")
        return 1 if rep.status == FAIL else 0
    return 0


def _print_report_line(r: dict) -> None:
    line = f"{r['status']:<8} {r['theorem_id']:<22}"
    if r["status"] == "Skipped":
        line += f" ({r['reason']})"
    else:
        line += f" lhs={r['lhs']} rhs={r['rhs']}"
    print(line)
    note = r.get("notes", {}).get("converse_note")
    if note:
        print(f"         note: {note}")


def cmd_verify(args) -> int:
    G = load_graph(args.input)
    checks = list(CHECKS) if args.check == "all" else [args.check]
    if args.check != "all" and args.check not in CHECKS:
        raise DomlabError(f"unknown check {args.check!r}; known: all, {', '.join(CHECKS)}")
    results = [r.to_dict() for r in verify_all(G, checks, _cfg(args))]
    for r in results:
        _print_report_line(r)
    report = build_report(results, {"mode": "single", "input": args.input, "checks": checks}, graphs=1)
    if args.json:
        Path(args.json).write_text(json.dumps(report, indent=2) + "\n")
    return 1 if report["summary"]["fail"] else 0


def _corpus_spec(args) -> CorpusSpec:
    checks = tuple(args.checks.split(",")) if args.checks else tuple(CHECKS)
    kw = dict(checks=checks, jobs=args.jobs, dedup=not args.labeled)
    if args.exhaustive is not None:
        return CorpusSpec.exhaustive(args.exhaustive, **kw)
    if args.trees is not None:
        return CorpusSpec.trees(args.trees, **kw)
    if args.random_trees:
        count, max_n = args.random_trees
        return CorpusSpec.random_trees(count, max_n, args.seed, **kw)
    if args.random_connected:
        count, max_n = (int(x) for x in args.random_connected[:2])
        return CorpusSpec.random_connected(count, max_n, float(args.random_connected[2]), args.seed, **kw)
    return CorpusSpec.from_file(args.file, **kw)


def _cfg(args) -> SolverConfig:
    return SolverConfig(element_cap=args.element_cap) if args.element_cap else SolverConfig()


def cmd_corpus(args) -> int:
    report = run_corpus(_corpus_spec(args), _cfg(args))
    s = report["summary"]
    for tid, counts in report["by_theorem"].items():
        print(f"{tid:<22} pass={counts['pass']} fail={counts['fail']} skipped={counts['skipped']}")
    print(f"total: {report['graphs']} graphs, pass={s['pass']} fail={s['fail']} "
          f"skipped={s['skipped']} ({report['elapsed']:.1f}s)")
    for r in report["results"]:
        if r["status"] == FAIL:
            print(f"FAIL {r['theorem_id']} n={r['n']} edges={r['edges']}")
    if args.json:
        Path(args.json).write_text(json.dumps(report, indent=2) + "\n")
    return 1 if s["fail"] else 0


def cmd_alpha_scan(args) -> int:
    out = alpha_scan(_corpus_spec(args), _cfg(args))
    for row in out["rows"][: args.top]:
        print(f"ratio={row['ratio']:<6} gamma_t={row['gamma_t']} gamma_tm={row['gamma_tm']} "
              f"n={row['n']} edges={row['edges']}")
    print(f"min ratio over {out['graphs']} graphs: {out['min_ratio']}")
    if args.json:
        Path(args.json).write_text(json.dumps(out, indent=2) + "\n")
    return 0


def cmd_convert(args) -> int:
    graphs = [load_graph(args.input)] if not Path(args.input).is_file() else read_graphs(args.input)
    chunks = []
    for k, G in enumerate(graphs):
        if args.to == "edge-list":
            chunks.append(format_edge_list(G))
        elif args.to == "graph6":
            chunks.append(encode_graph6(G) + "\n")
        else:
            hl = parse_witness_file(Path(args.highlight).read_text(), G) if args.highlight else None
            chunks.append(to_dot(G, hl, name=f"G{k}" if len(graphs) > 1 else "G"))
    text = "".join(chunks)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _add_corpus_flags(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--exhaustive", type=int, metavar="N", help="all connected graphs with 2 <= n <= N")
    src.add_argument("--trees", type=int, metavar="N", help="all trees with 2 <= n <= N (Pruefer)")
    src.add_argument("--random-trees", type=int, nargs=2, metavar=("COUNT", "MAX_N"))
    src.add_argument("--random-connected", nargs=3, metavar=("COUNT", "MAX_N", "P"))
    src.add_argument("--file", metavar="PATH", help="graph6 lines or a single edge list")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checks", help="comma-separated check ids (default: all)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--labeled", action="store_true", help="no isomorphism dedup")
    p.add_argument("--element-cap", type=int, help="override the solver element cap")
    p.add_argument("--json", metavar="OUT", help="write the JSON report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domlab", description="Exact total mixed domination toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute an invariant with a witness")
    p.add_argument("invariant", choices=INVARIANTS)
    p.add_argument("input")
    p.add_argument("--witness-out", metavar="PATH", help="write the witness (0-indexed) to PATH")
    p.add_argument("--element-cap", type=int, help="override the solver element cap")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("witness", help="constructive minimum TMDS of a family member")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="+")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("formula", help="closed-form value of a family member")
    p.add_argument("family", choices=FAMILIES + ("line-complete", "line-wheel"))
    p.add_argument("params", nargs="+")
    p.add_argument("--check", action="store_true", help="also compare with the exact solver")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", help="run one or all theorem checks on a graph")
    p.add_argument("check", help="check id or 'all'")
    p.add_argument("input")
    p.add_argument("--element-cap", type=int, help="override the solver element cap")
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="run checks over a graph corpus")
    _add_corpus_flags(p)
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("alpha-scan", help="smallest gamma_tm/gamma_t ratio over a corpus (exploratory)")
    _add_corpus_flags(p)
    p.add_argument("--top", type=int, default=5)
    p.set_defaults(func=cmd_alpha_scan)

    p = sub.add_parser("convert", help="convert between edge-list, graph6 and DOT")
    p.add_argument("input")
    p.add_argument("--to", required=True, choices=("edge-list", "graph6", "dot"))
    p.add_argument("--highlight", metavar="WITNESS", help="witness file to colour in DOT output")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomlabError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())


__all__ = ["main", "build_parser", "load_graph"]
