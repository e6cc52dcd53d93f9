"""Exact maximum clique with a deterministic (lexicographically least) answer.

Two passes.  The first finds the clique number with a colouring-bounded
branch and bound run on a smallest-last (degeneracy) relabelling.  The
second walks cliques as increasing id sequences, in lexicographic order,
and stops at the first one of that size.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, bits, induced


@dataclass(frozen=True)
class CliqueResult:
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def degeneracy_order(g: Graph) -> list[int]:
    """Smallest-last ordering, reversed so high-core vertices come first."""
    remaining = g.all_mask
    deg = [g.degree(v) for v in range(g.n)]
    removed: list[int] = []
    while remaining:
        v = min(bits(remaining), key=lambda u: (deg[u], u))
        removed.append(v)
        remaining &= ~(1 << v)
        for u in bits(g.adj_mask(v) & remaining):
            deg[u] -= 1
    removed.reverse()
    return removed


def _greedy_color_classes(adj: list[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy colouring of ``cand`` in bit order.

    Returns vertices sorted by colour together with the colour number
    (1-based) of each, so ``colors[i]`` bounds the clique size among
    ``order[:i+1]``.
    """
    order: list[int] = []
    colors: list[int] = []
    uncolored = cand
    k = 0
    while uncolored:
        k += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append(v)
            colors.append(k)
            uncolored &= ~low
            avail &= ~low & ~adj[v]
    return order, colors


def _color_bound(adj: list[int], cand: int) -> int:
    _, colors = _greedy_color_classes(adj, cand)
    return colors[-1] if colors else 0


def _mcq(adj: list[int], size: int, cand: int, best: int) -> int:
    order, colors = _greedy_color_classes(adj, cand)
    for i in range(len(order) - 1, -1, -1):
        if size + colors[i] <= best:
            return best
        v = order[i]
        sub = cand & adj[v]
        if sub:
            best = _mcq(adj, size + 1, sub, best)
        elif size + 1 > best:
            best = size + 1
        cand &= ~(1 << v)
    return best


def _clique_number_bb(g: Graph) -> int:
    if g.n == 0:
        return 0
    order = degeneracy_order(g)
    pos = {v: i for i, v in enumerate(order)}
    adj = [0] * g.n
    for v in range(g.n):
        m = 0
        for u in bits(g.adj_mask(v)):
            m |= 1 << pos[u]
        adj[pos[v]] = m
    return _mcq(adj, 0, g.all_mask, 0)


def _lex_least(adj: list[int], cur: list[int], cand: int, target: int) -> list[int] | None:
    if len(cur) == target:
        return list(cur)
    if len(cur) + _color_bound(adj, cand) < target:
        return None
    while cand:
        if len(cur) + cand.bit_count() < target:
            return None
        low = cand & -cand
        v = low.bit_length() - 1
        cand &= ~low
        cur.append(v)
        # only higher ids follow, so sets are visited as increasing sequences
        found = _lex_least(adj, cur, cand & adj[v], target)
        cur.pop()
        if found is not None:
            return found
    return None


def max_clique(g: Graph) -> CliqueResult:
    """Lexicographically least maximum clique (empty for the empty graph)."""
    omega = _clique_number_bb(g)
    if omega == 0:
        return CliqueResult(())
    adj = [g.adj_mask(v) for v in range(g.n)]
    found = _lex_least(adj, [], g.all_mask, omega)
    assert found is not None and len(found) == omega
    return CliqueResult(tuple(found))


def clique_number(g: Graph) -> int:
    return _clique_number_bb(g)


def max_clique_in(g: Graph, vertices: Iterable[int]) -> tuple[int, ...]:
    """Lex-least maximum clique of ``g[vertices]``, in ``g``'s ids."""
    sub, index_map = induced(g, vertices)
    return tuple(index_map[v] for v in max_clique(sub).members)
