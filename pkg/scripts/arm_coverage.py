"""Count which construction branch of the diamond-free colourer each source reaches.

Sources are the seeded G(n, p)/planted corpus, the named graphs, and the
hand-built instances for the branches random sampling does not reach.

    python3 scripts/arm_coverage.py --size 400 --seed 3
"""
from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from p2p4color.colorers import color
from p2p4color.gen import CorpusConfig, corpus, named_graph

NAMED = ["grotzsch", "two-k5s", "clique-plus-pendant(5)", "clique-plus-pendant(6)", "clique-plus-pendant(7)",
         "K2", "K3", "K4", "K5", "K6", "K7"]
HAND_BUILT = ["two-cliques-crossed", "two-cliques-tail", "cliques(4,4)", "cliques(5,2)", "cliques(5,3)"]


@dataclass(frozen=True)
class CoverageConfig:
    size: int = 200
    seed: int = 2024
    n_max: int = 14
    omega_max: int = 6


def coverage(cfg: CoverageConfig) -> dict[str, Counter]:
    graphs = corpus(CorpusConfig("diamond", cfg.size, cfg.seed, n_max=cfg.n_max,
                                 omega_range=(3, cfg.omega_max)))
    return {
        "corpus": Counter(color(g, "diamond").arm for g in graphs),
        "named": Counter(color(named_graph(n), "diamond").arm for n in NAMED),
        "hand-built": Counter(color(named_graph(n), "diamond").arm for n in HAND_BUILT),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=CoverageConfig.size)
    ap.add_argument("--seed", type=int, default=CoverageConfig.seed)
    ap.add_argument("--n-max", type=int, default=CoverageConfig.n_max)
    ap.add_argument("--omega-max", type=int, default=CoverageConfig.omega_max)
    a = ap.parse_args()
    table = coverage(CoverageConfig(a.size, a.seed, a.n_max, a.omega_max))
    arms = sorted(set().union(*table.values()))
    print(f"{'arm':<32}" + "".join(f"{k:>12}" for k in table))
    for arm in arms:
        print(f"{arm:<32}" + "".join(f"{table[k][arm]:>12}" for k in table))


if __name__ == "__main__":
    main()
