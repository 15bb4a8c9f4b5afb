"""Count kernels of random digraphs, binned by size and edge probability.

    python scripts/kernel_census.py --sizes 4 8 12 --probs 0.1 0.3 --trials 200
"""

from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from kernelhood import is_dag, kernel_search
from kernelhood.gen import DigraphConfig, random_digraph


@dataclass(frozen=True)
class CensusConfig:
    sizes: tuple[int, ...] = (4, 8, 12)
    probs: tuple[float, ...] = (0.1, 0.2, 0.3)
    trials: int = 200
    seed: int = 0


def census(cfg: CensusConfig) -> list[tuple[int, float, Counter, int]]:
    rng = random.Random(cfg.seed)
    rows = []
    for n in cfg.sizes:
        for p in cfg.probs:
            counts: Counter = Counter()
            dags = 0
            for _ in range(cfg.trials):
                g = random_digraph(rng, DigraphConfig(n, n, p, acyclic=False))
                dags += is_dag(g)
                counts[min(len(kernel_search(g)), 3)] += 1
            rows.append((n, p, counts, dags))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=list(CensusConfig.sizes))
    ap.add_argument("--probs", type=float, nargs="+", default=list(CensusConfig.probs))
    ap.add_argument("--trials", type=int, default=CensusConfig.trials)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    cfg = CensusConfig(tuple(a.sizes), tuple(a.probs), a.trials, a.seed)
    print(f"{'n':>3} {'p':>5} {'dag':>5} {'0':>6} {'1':>6} {'2':>6} {'3+':>6}")
    for n, p, c, dags in census(cfg):
        print(f"{n:>3} {p:>5.2f} {dags:>5} " + " ".join(f"{c[i]:>6}" for i in range(4)))


if __name__ == "__main__":
    main()
