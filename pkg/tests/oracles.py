"""Independent reference implementations used only by the tests.

Nothing here shares code with the package beyond the Graph container:
brute force over vertex subsets, a naive k-sweep colourer and networkx.
"""
from __future__ import annotations

from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from p2p4color.graph import Graph, from_edge_list


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_omega(g: Graph) -> int:
    best = 0
    for k in range(1, g.n + 1):
        if any(g.is_clique(s) for s in combinations(range(g.n), k)):
            best = k
        else:
            break
    return best


def naive_chi(g: Graph) -> int:
    """Smallest k admitting a proper colouring, by plain backtracking in vertex order."""
    if g.n == 0:
        return 0
    nbrs = [g.neighbors(v) for v in range(g.n)]

    def fits(k: int) -> bool:
        col = [-1] * g.n

        def go(v: int) -> bool:
            if v == g.n:
                return True
            used = {col[u] for u in nbrs[v] if u < v}
            # symmetry break: vertex v may open at most one new colour
            top = min(k, max(col[:v], default=-1) + 2)
            for c in range(top):
                if c not in used:
                    col[v] = c
                    if go(v + 1):
                        return True
            col[v] = -1
            return False

        return go(0)

    k = 1
    while not fits(k):
        k += 1
    return k


def brute_contains(g: Graph, pat: Graph) -> bool:
    """Induced-subgraph containment by isomorphism test on every |pat|-subset."""
    target = to_nx(pat)
    for s in combinations(range(g.n), pat.n):
        sub = to_nx(g).subgraph(s)
        if sub.number_of_edges() == pat.m and nx.is_isomorphic(sub, target):
            return True
    return False


def is_p4_free(g: Graph) -> bool:
    return not brute_contains(g, from_edge_list(4, [(0, 1), (1, 2), (2, 3)]))


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9, density=None):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.floats(0.0, 1.0)) if density is None else density
    pairs = list(combinations(range(n), 2))
    coins = draw(st.lists(st.floats(0.0, 1.0), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [e for e, c in zip(pairs, coins) if c < p])
