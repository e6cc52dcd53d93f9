"""Colour a seeded in-class corpus and tabulate colours used against χ and the bound.

    python3 scripts/corpus_sweep.py --cls diamond --size 300 --seed 1
"""
from __future__ import annotations

import argparse
import time
from collections import Counter, defaultdict
from dataclasses import dataclass

from p2p4color.clique import clique_number, max_clique
from p2p4color.colorers import bound, color
from p2p4color.coloring import verify_coloring
from p2p4color.gen import CorpusConfig, corpus
from p2p4color.oracle import chromatic_number
from p2p4color.wagon import verify_structure, wagon_partition


@dataclass(frozen=True)
class SweepConfig:
    cls: str = "diamond"
    size: int = 200
    seed: int = 0
    n_min: int = 6
    n_max: int = 14


def sweep(cfg: SweepConfig) -> dict:
    graphs = corpus(CorpusConfig(cfg.cls, cfg.size, cfg.seed, cfg.n_min, cfg.n_max))
    by_omega: dict[int, Counter] = defaultdict(Counter)
    worst_gap: dict[int, int] = {}
    arms = Counter()
    for g in graphs:
        w = clique_number(g)
        c = color(g, cfg.cls)
        assert verify_coloring(g, c) is None
        assert verify_structure(g, wagon_partition(g, max_clique(g)), cfg.cls).ok
        chi = chromatic_number(g).chi
        assert chi <= c.colors_used <= bound(cfg.cls, w)
        by_omega[w]["graphs"] += 1
        by_omega[w]["optimal"] += c.colors_used == chi
        worst_gap[w] = max(worst_gap.get(w, 0), c.colors_used - chi)
        arms[c.arm] += 1
    return {"by_omega": by_omega, "worst_gap": worst_gap, "arms": arms}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cls", default=SweepConfig.cls, choices=["gem", "butterfly", "diamond"])
    ap.add_argument("--size", type=int, default=SweepConfig.size)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--n-min", type=int, default=SweepConfig.n_min)
    ap.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    a = ap.parse_args()
    cfg = SweepConfig(a.cls, a.size, a.seed, a.n_min, a.n_max)
    t = time.perf_counter()
    out = sweep(cfg)
    print(f"{cfg}  ({time.perf_counter() - t:.1f}s)")
    print(f"{'omega':>5} {'graphs':>6} {'bound':>5} {'optimal':>7} {'worst used-chi':>14}")
    for w in sorted(out["by_omega"]):
        row = out["by_omega"][w]
        print(f"{w:>5} {row['graphs']:>6} {bound(cfg.cls, w):>5} {row['optimal']:>7} {out['worst_gap'][w]:>14}")
    print("arms:", dict(out["arms"]))


if __name__ == "__main__":
    main()
