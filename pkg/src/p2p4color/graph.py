"""Immutable simple undirected graphs on dense 0-based vertex ids.

Adjacency is stored as one Python int bitmask per vertex, which keeps
neighbourhood intersections and subset tests cheap for the detectors.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """A finite simple graph.

    Instances are immutable; every operation that changes the graph returns
    a new value.  Equality is on ``(n, edge set)``, i.e. labelled equality.
    """

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, adj: Sequence[int]):
        # Internal constructor; use from_edge_list for validated input.
        self._n = n
        self._adj = tuple(adj)
        self._m = sum(a.bit_count() for a in self._adj) // 2

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def all_mask(self) -> int:
        return (1 << self._n) - 1

    def __len__(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(self._n)

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = to_mask(vs)
        return all(mask & ~(self._adj[v] | 1 << v) == 0 for v in vs)

    def is_stable(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = to_mask(vs)
        return all(self._adj[v] & mask == 0 for v in vs)

    def check_invariants(self) -> None:
        """Raise AssertionError unless adjacency is symmetric and loop-free."""
        full = self.all_mask
        for v, a in enumerate(self._adj):
            assert a & ~full == 0, f"vertex {v} has out-of-range neighbour"
            assert not a >> v & 1, f"self-loop at {v}"
            for u in bits(a):
                assert self._adj[u] >> v & 1, f"asymmetric pair ({v}, {u})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``0..n-1``; duplicate edges are dropped silently.

    Raises ValueError on self-loops or endpoints outside the vertex range.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def induced(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``.

    Returns the new graph together with ``index_map`` where ``index_map[i]``
    is the vertex of ``g`` that became vertex ``i``.  New ids follow the
    increasing order of the original ids.
    """
    index_map = sorted(set(vertices))
    for v in index_map:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    pos = {v: i for i, v in enumerate(index_map)}
    sel = to_mask(index_map)
    adj = []
    for v in index_map:
        adj.append(to_mask(pos[u] for u in bits(g.adj_mask(v) & sel)))
    return Graph(len(index_map), adj), index_map


def components(g: Graph, mask: int, complemented: bool = False) -> list[int]:
    """Connected components of ``g[mask]`` (or of its complement) as bitmasks."""
    comps = []
    left = mask
    while left:
        comp = frontier = left & -left
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            nb = g.adj_mask(v)
            if complemented:
                nb = ~nb & ~(1 << v)
            new = nb & mask & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        left &= ~comp
    return comps


def complement(g: Graph) -> Graph:
    full = g.all_mask
    return Graph(g.n, [full & ~a & ~(1 << v) for v, a in enumerate(g._adj)])


def disjoint_union(*graphs: Graph) -> Graph:
    """Vertex-disjoint union; vertices of later graphs are shifted up."""
    adj: list[int] = []
    offset = 0
    for h in graphs:
        adj.extend(a << offset for a in h._adj)
        offset += h.n
    return Graph(offset, adj)


def join(*graphs: Graph) -> Graph:
    """Complete join: disjoint union plus every edge between different parts."""
    u = disjoint_union(*graphs)
    adj = list(u._adj)
    offset = 0
    total = u.all_mask
    for h in graphs:
        part = ((1 << h.n) - 1) << offset
        for v in range(offset, offset + h.n):
            adj[v] |= total & ~part
        offset += h.n
    return Graph(u.n, adj)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def mycielskian(g: Graph) -> Graph:
    """Mycielski construction.

    Vertices ``0..n-1`` are the originals, ``n..2n-1`` their shadows
    (shadow ``n+v`` is adjacent to the original neighbours of ``v``) and
    ``2n`` is the apex adjacent to every shadow.
    """
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges.append((n + u, v))
        edges.append((n + v, u))
    edges.extend((2 * n, n + v) for v in range(n))
    return from_edge_list(2 * n + 1, edges)


def complete(t: int) -> Graph:
    return from_edge_list(t, combinations(range(t), 2))


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    return from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def empty(n: int) -> Graph:
    return Graph(n, [0] * n)
