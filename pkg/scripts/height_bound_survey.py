"""How close do sentence digraphs come to the (2^(m+1)-1)|F| height bound?

Prints, per radius m, the largest observed height/bound ratio over random
structures and seed sets, plus the worst seed set found.
"""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass

from kernelhood import FiniteStructure, height_bound_check, is_vertex_sentence, to_text
from kernelhood.gen import SentenceConfig, random_formula, random_structure


@dataclass(frozen=True)
class SurveyConfig:
    instances: int = 300
    max_radius: int = 4
    max_seeds: int = 4
    max_depth: int = 6
    max_domain: int = 3
    seed: int = 0


def survey(cfg: SurveyConfig):
    rng = random.Random(cfg.seed)
    worst = {r: (-1.0, None) for r in range(cfg.max_radius + 1)}
    for _ in range(cfg.instances):
        n = rng.randint(1, cfg.max_domain)
        m = FiniteStructure.zmod(n) if rng.random() < 0.5 else random_structure(rng, n)
        scfg = SentenceConfig(max_depth=cfg.max_depth, domain_size=n, atom_prob=0.1)
        seeds = [s for s in (random_formula(rng, scfg) for _ in range(rng.randint(1, cfg.max_seeds)))
                 if is_vertex_sentence(m, s)]
        if not seeds:
            continue
        for r in worst:
            rep = height_bound_check(m, seeds, r)
            if not rep.holds:
                raise SystemExit(f"bound violated at m={r}: {[to_text(s) for s in seeds]}")
            ratio = rep.height / rep.bound
            if ratio > worst[r][0]:
                worst[r] = (ratio, (rep, seeds))
    return worst


def main() -> None:
    ap = argparse.ArgumentParser(description="height bound survey")
    ap.add_argument("--instances", type=int, default=SurveyConfig.instances)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    for r, (ratio, found) in survey(SurveyConfig(instances=a.instances, seed=a.seed)).items():
        if found is None:
            print(f"m={r}: no instances")
            continue
        rep, seeds = found
        print(f"m={r}: max height/bound = {ratio:.3f} (height {rep.height}, bound {rep.bound}, |F|={rep.seeds})")


if __name__ == "__main__":
    main()
