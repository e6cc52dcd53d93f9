"""Exact chromatic number, used as ground truth by the test suite."""
from __future__ import annotations

from dataclasses import dataclass

from .clique import max_clique
from .coloring import Coloring
from .graph import Graph, bits

DEFAULT_MAX_N = 20


class OracleRefused(ValueError):
    """The input exceeds the configured size guard."""


@dataclass(frozen=True)
class OracleResult:
    chi: int
    witness: Coloring


class _Dsatur:
    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.adj = [g.adj_mask(v) for v in range(g.n)]
        self.color = [-1] * g.n
        # bitmask of colours present in the neighbourhood of each vertex
        self.sat = [0] * g.n
        self.best: list[int] | None = None
        self.ub = g.n + 1
        self.lb = 0

    def assign(self, v: int, c: int) -> list[int]:
        self.color[v] = c
        touched = []
        bit = 1 << c
        for u in bits(self.adj[v]):
            if not self.sat[u] & bit:
                self.sat[u] |= bit
                touched.append(u)
        return touched

    def unassign(self, v: int, c: int, touched: list[int]) -> None:
        self.color[v] = -1
        bit = 1 << c
        for u in touched:
            self.sat[u] &= ~bit

    def pick(self, uncolored: int) -> int:
        best_v, best_key = -1, None
        for v in bits(uncolored):
            key = (self.sat[v].bit_count(), (self.adj[v] & uncolored).bit_count())
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def search(self, uncolored: int, k: int) -> None:
        if self.ub <= self.lb:
            return
        if not uncolored:
            if k < self.ub:
                self.ub = k
                self.best = list(self.color)
            return
        v = self.pick(uncolored)
        rest = uncolored & ~(1 << v)
        forbidden = self.sat[v]
        for c in range(k):
            if forbidden >> c & 1:
                continue
            touched = self.assign(v, c)
            self.search(rest, k)
            self.unassign(v, c, touched)
            if self.ub <= self.lb:
                return
        if k + 1 < self.ub:
            touched = self.assign(v, k)
            self.search(rest, k + 1)
            self.unassign(v, k, touched)


def chromatic_number(g: Graph, max_n: int = DEFAULT_MAX_N) -> OracleResult:
    """Exact χ by DSATUR branch and bound.

    The maximum clique is precoloured ``0..ω-1`` (it supplies the lower
    bound) and the first complete DSATUR descent supplies the upper bound.
    """
    if g.n > max_n:
        raise OracleRefused(f"graph has {g.n} vertices, oracle guard is {max_n}")
    if g.n == 0:
        return OracleResult(0, Coloring((), 0, "oracle"))
    solver = _Dsatur(g)
    clique = max_clique(g).members
    solver.lb = len(clique)
    uncolored = g.all_mask
    for c, v in enumerate(clique):
        solver.assign(v, c)
        uncolored &= ~(1 << v)
    solver.search(uncolored, len(clique))
    assert solver.best is not None
    chi = solver.ub
    return OracleResult(chi, Coloring(tuple(solver.best), chi, "oracle"))


def subset_tables(g: Graph, max_n: int = 16) -> tuple[list[int], list[int]]:
    """χ and ω of ``g[S]`` for every vertex subset ``S`` (indexed by bitmask).

    χ comes from the recurrence over independent sets holding the lowest
    vertex of ``S``; ω from ``max(ω(S-v), 1 + ω(S ∩ N(v)))``.
    """
    n = g.n
    if n > max_n:
        raise OracleRefused(f"subset tables need 2^{n} entries, guard is n <= {max_n}")
    size = 1 << n
    adj = [g.adj_mask(v) for v in range(n)]
    indep = bytearray(size)
    indep[0] = 1
    omega = [0] * size
    chi = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        indep[mask] = indep[rest] and not adj[v] & rest
        omega[mask] = max(omega[rest], 1 + omega[rest & adj[v]])
        # v's colour class is {v} plus an independent subset of rest \ N(v)
        free = rest & ~adj[v]
        best = chi[rest]
        sub = free
        while sub:
            if indep[sub] and chi[rest ^ sub] < best:
                best = chi[rest ^ sub]
            sub = (sub - 1) & free
        chi[mask] = best + 1
    return chi, omega
