"""Freeze reference values for the named graphs into tests/data/frozen.json.

Values come from networkx and subset brute force, never from the package
algorithms, so the frozen file is an independent oracle.  Rerun only when
the named-graph catalogue changes.
"""
import json
import sys
from itertools import combinations
from pathlib import Path

import networkx as nx

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from oracles import brute_contains, naive_chi, to_nx  # noqa: E402
from p2p4color.detect import BUTTERFLY, C5, C7, DIAMOND, GEM, P2_P4  # noqa: E402
from p2p4color.gen import named_graph  # noqa: E402
from p2p4color.graph import from_edge_list  # noqa: E402

NAMES = [
    "grotzsch", "petersen", "two-k5s", "clique-plus-pendant(5)", "clique-plus-pendant(6)",
    "clique-plus-pendant(7)", "cliques(4,4)", "cliques(5,2)", "cliques(5,3)", "cliques(6,6)",
    "p2p4", "diamond", "gem", "butterfly", "C5", "C7", "C9", "K2", "K6", "P4",
]
PATTERNS = {"P2uP4": P2_P4, "diamond": DIAMOND, "gem": GEM, "butterfly": BUTTERFLY, "C5": C5, "C7": C7}


def record(name):
    g = named_graph(name)
    h = to_nx(g)
    omega = max((len(c) for c in nx.find_cliques(h)), default=0)
    contains = {k: brute_contains(g, p.graph) for k, p in PATTERNS.items()}
    perfect = None
    if g.n <= 12:
        perfect = True
        for k in range(1, g.n + 1):
            for s in combinations(range(g.n), k):
                sub = to_nx(g).subgraph(s)
                hs = from_edge_list(k, [(s.index(u), s.index(v)) for u, v in sub.edges()])
                w = max((len(c) for c in nx.find_cliques(sub)), default=0)
                if naive_chi(hs) != w:
                    perfect = False
                    break
            if not perfect:
                break
    return {"n": g.n, "m": g.m, "omega": omega, "chi": naive_chi(g), "contains": contains,
            "perfect": perfect}


if __name__ == "__main__":
    out = {name: record(name) for name in NAMES}
    path = ROOT / "tests" / "data" / "frozen.json"
    path.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    print(f"wrote {len(out)} records to {path}")
