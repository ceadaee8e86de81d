"""Run the theorem checks over the standard corpora and write JSON reports.

    python scripts/run_corpus.py --out results/ --max-n 6 --tree-n 9
"""

import argparse
import json
from dataclasses import asdict, dataclass
from pathlib import Path

from domlab.solvers import SolverConfig
from domlab.verify import TREE_CHECKS, CorpusSpec, failures, run_corpus


@dataclass
class RunConfig:
    out: Path = Path("results")
    max_n: int = 6
    tree_n: int = 9
    random_trees: int = 200
    random_tree_n: int = 12
    seed: int = 42
    jobs: int = 1
    element_cap: int = 64


def corpora(cfg: RunConfig) -> dict[str, CorpusSpec]:
    return {
        f"exhaustive_n{cfg.max_n}": CorpusSpec.exhaustive(cfg.max_n, jobs=cfg.jobs),
        f"trees_n{cfg.tree_n}": CorpusSpec.trees(cfg.tree_n, checks=TREE_CHECKS, jobs=cfg.jobs),
        f"random_trees_{cfg.random_trees}_seed{cfg.seed}": CorpusSpec.random_trees(
            cfg.random_trees, cfg.random_tree_n, cfg.seed, checks=TREE_CHECKS, jobs=cfg.jobs),
    }


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--out", type=Path, default=RunConfig.out)
    p.add_argument("--max-n", type=int, default=RunConfig.max_n)
    p.add_argument("--tree-n", type=int, default=RunConfig.tree_n)
    p.add_argument("--seed", type=int, default=RunConfig.seed)
    p.add_argument("--jobs", type=int, default=RunConfig.jobs)
    cfg = RunConfig(**vars(p.parse_args()))
    cfg.out.mkdir(parents=True, exist_ok=True)
    solver = SolverConfig(element_cap=cfg.element_cap)

    total_fail = 0
    for name, spec in corpora(cfg).items():
        report = run_corpus(spec, solver)
        report["run_config"] = {k: str(v) for k, v in asdict(cfg).items()}
        (cfg.out / f"{name}.json").write_text(json.dumps(report, indent=2) + "\n")
        s = report["summary"]
        total_fail += s["fail"]
        print(f"{name:<32} graphs={report['graphs']:<5} pass={s['pass']:<5} fail={s['fail']:<3} "
              f"skipped={s['skipped']:<5} {report['elapsed']:.1f}s")
        for r in failures(report)[:10]:
            print(f"    FAIL {r['theorem_id']} n={r['n']} edges={r['edges']}")
    return 1 if total_fail else 0


if __name__ == "__main__":
    raise SystemExit(main())
