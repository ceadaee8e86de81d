"""Smallest observed gamma_tm / gamma_t over exhaustive and family corpora.

Exploratory only: prints the extremal graphs, asserts nothing.
"""

import argparse
from dataclasses import dataclass

from domlab.constructors import cycle_graph, path_graph, star, wheel
from domlab.corpus import exhaustive_connected
from domlab.solvers import SolverConfig
from domlab.verify import alpha_scan


@dataclass
class ScanConfig:
    max_n: int = 6
    top: int = 8


def show(title: str, out: dict, top: int) -> None:
    print(f"== {title}: {out['graphs']} graphs, min ratio {out['min_ratio']}")
    for row in out["rows"][:top]:
        print(f"   {row['ratio']:>5}  gamma_t={row['gamma_t']} gamma_tm={row['gamma_tm']} "
              f"n={row['n']} m={row['m']} edges={row['edges']}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=ScanConfig.max_n)
    p.add_argument("--top", type=int, default=ScanConfig.top)
    cfg = ScanConfig(**vars(p.parse_args()))
    solver = SolverConfig(element_cap=64)

    show(f"connected graphs n <= {cfg.max_n}", alpha_scan(exhaustive_connected(cfg.max_n), solver), cfg.top)
    show("stars K_1,k", alpha_scan([star(k) for k in range(1, 9)], solver), cfg.top)
    show("wheels W_4..W_12", alpha_scan([wheel(n) for n in range(4, 13)], solver), cfg.top)
    # the largest ratios are the interesting end for paths and cycles
    paths = alpha_scan([path_graph(n) for n in range(2, 15)] + [cycle_graph(n) for n in range(3, 15)], solver)
    paths["rows"].reverse()
    show("paths and cycles (largest first)", paths, cfg.top)


if __name__ == "__main__":
    main()
