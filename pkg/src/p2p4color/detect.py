"""Induced-subgraph detection for small forbidden configurations.

Everything here is exact backtracking over bitmasks.  Pattern vertices are
placed in their own label order and host candidates are tried in
increasing id order, so the returned embedding is the lexicographically
least one.  Pattern labellings below are chosen so that each vertex after
the first touches an earlier one where the pattern allows it, which keeps
the candidate masks small.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .graph import Graph, bits, complement, complete, cycle, disjoint_union, from_edge_list, path


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph

    @property
    def order(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class PatternWitness:
    """Induced embedding: pattern vertex ``i`` sits on host vertex ``embedding[i]``."""

    pattern: Pattern
    embedding: tuple[int, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.embedding)

    def is_valid(self, g: Graph) -> bool:
        """Re-check the embedding edge by edge and non-edge by non-edge."""
        emb = self.embedding
        h = self.pattern.graph
        if len(emb) != h.n or len(set(emb)) != len(emb):
            return False
        if any(not 0 <= v < g.n for v in emb):
            return False
        for i in range(h.n):
            for j in range(i + 1, h.n):
                if h.has_edge(i, j) != g.has_edge(emb[i], emb[j]):
                    return False
        return True

    def to_dict(self) -> dict:
        return {"pattern": self.pattern.name, "embedding": list(self.embedding)}


def _p2p4() -> Graph:
    # P4 on 0-1-2-3 first, then the edge 4-5.
    return disjoint_union(path(4), path(2))


def _diamond() -> Graph:
    # 0 and 1 are the degree-3 vertices; 2, 3 the non-adjacent tips.
    return from_edge_list(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])


def _gem() -> Graph:
    # Path 0-1-2-3 with universal vertex 4.
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])


def _butterfly() -> Graph:
    # Centre 0; triangles {0,1,2} and {0,3,4}.
    return from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


P2 = Pattern("P2", path(2))
P3 = Pattern("P3", path(3))
P4 = Pattern("P4", path(4))
P2_P4 = Pattern("P2uP4", _p2p4())
DIAMOND = Pattern("diamond", _diamond())
GEM = Pattern("gem", _gem())
BUTTERFLY = Pattern("butterfly", _butterfly())
C5 = Pattern("C5", cycle(5))
C7 = Pattern("C7", cycle(7))

_FIXED = {p.name.lower(): p for p in (P2, P3, P4, P2_P4, DIAMOND, GEM, BUTTERFLY, C5, C7)}
_ALIASES = {"p2p4": "p2up4", "p2∪p4": "p2up4", "p2+p4": "p2up4"}


def clique_pattern(t: int) -> Pattern:
    return Pattern(f"K{t}", complete(t))


def cycle_pattern(k: int) -> Pattern:
    return Pattern(f"C{k}", cycle(k))


def antihole_pattern(k: int) -> Pattern:
    return Pattern(f"co-C{k}", complement(cycle(k)))


def pattern(name: str) -> Pattern:
    """Look up a pattern by name, e.g. ``"p2p4"``, ``"diamond"``, ``"K4"``, ``"C9"``."""
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    if key in _FIXED:
        return _FIXED[key]
    m = re.fullmatch(r"k_?(\d+)", key)
    if m:
        return clique_pattern(int(m.group(1)))
    m = re.fullmatch(r"c_?(\d+)", key)
    if m and int(m.group(1)) >= 3:
        return cycle_pattern(int(m.group(1)))
    raise ValueError(f"unknown pattern {name!r}")


def iter_induced(g: Graph, pat: Pattern) -> Iterator[PatternWitness]:
    """All induced embeddings of ``pat`` in lexicographic order."""
    k = pat.graph.n
    if k > g.n:
        return
    full = g.all_mask
    padj = [pat.graph.adj_mask(i) for i in range(k)]
    emb = [0] * k

    def extend(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == k:
            yield tuple(emb)
            return
        cand = full & ~used
        for j in range(i):
            if padj[i] >> j & 1:
                cand &= g.adj_mask(emb[j])
            else:
                cand &= ~g.adj_mask(emb[j])
            if not cand:
                return
        for v in bits(cand):
            emb[i] = v
            yield from extend(i + 1, used | 1 << v)

    for e in extend(0, 0):
        yield PatternWitness(pat, e)


def _find_clique(g: Graph, t: int) -> Optional[tuple[int, ...]]:
    # Vertices in increasing order, so each t-clique is visited once instead of t! times.
    chosen: list[int] = []

    def grow(cand: int) -> bool:
        if len(chosen) == t:
            return True
        while cand and len(chosen) + cand.bit_count() >= t:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            chosen.append(v)
            if grow(cand & g.adj_mask(v)):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if grow(g.all_mask) else None


def find_induced(g: Graph, pat: Pattern) -> Optional[PatternWitness]:
    """The lexicographically least induced embedding of ``pat``, or None."""
    t = pat.graph.n
    if t > 2 and pat.graph.m == t * (t - 1) // 2:
        found = _find_clique(g, t)
        return None if found is None else PatternWitness(pat, found)
    return next(iter_induced(g, pat), None)


def contains(g: Graph, pat: Pattern) -> bool:
    return find_induced(g, pat) is not None


@dataclass(frozen=True)
class ClassReport:
    """Per-pattern membership result; ``witnesses[name]`` is None when absent."""

    witnesses: dict[str, Optional[PatternWitness]]

    @property
    def member(self) -> bool:
        return all(w is None for w in self.witnesses.values())

    def violations(self) -> list[PatternWitness]:
        return [w for w in self.witnesses.values() if w is not None]

    def to_dict(self) -> dict:
        return {
            "member": self.member,
            "patterns": {
                name: ("absent" if w is None else w.to_dict()) for name, w in self.witnesses.items()
            },
        }


def is_in_class(g: Graph, forbidden: Iterable[Pattern]) -> ClassReport:
    return ClassReport({p.name: find_induced(g, p) for p in forbidden})


def lift(w: PatternWitness, index_map: list[int]) -> PatternWitness:
    """Map a witness found in an induced subgraph back to the host's ids."""
    return PatternWitness(w.pattern, tuple(index_map[v] for v in w.embedding))


def _find_induced_cycle(g: Graph, k: int) -> Optional[tuple[int, ...]]:
    """Some induced cycle on exactly ``k >= 4`` vertices, as a vertex sequence.

    The cycle's least vertex is the start and the second vertex is smaller
    than the last, so each cycle is met once.  Extensions must avoid every
    path vertex except the tail (and the start, when closing).
    """
    n = g.n
    for s in range(n):
        above = g.all_mask & ~((1 << (s + 1)) - 1)
        s_nb = g.adj_mask(s)
        seq = [s]

        def grow(inner_block: int) -> Optional[tuple[int, ...]]:
            # inner_block: union of closed neighbourhoods of seq[1:-1] plus path vertices
            tail = seq[-1]
            depth = len(seq)
            cand = g.adj_mask(tail) & above & ~inner_block
            if depth == k - 1:
                cand &= s_nb
                for v in bits(cand):
                    if v > seq[1]:
                        return tuple(seq) + (v,)
                return None
            if depth > 1:
                cand &= ~s_nb
            for v in bits(cand):
                if depth == 1:
                    nb = inner_block | 1 << v
                else:
                    nb = inner_block | g.adj_mask(tail) | 1 << v
                seq.append(v)
                found = grow(nb)
                seq.pop()
                if found:
                    return found
            return None

        found = grow(1 << s)
        if found:
            return found
    return None


def find_hole(g: Graph, length: int) -> Optional[PatternWitness]:
    """Induced cycle of exactly ``length`` vertices (``length >= 4``)."""
    if length < 4 or length > g.n:
        return None
    cyc = _find_induced_cycle(g, length)
    if cyc is None:
        return None
    return PatternWitness(cycle_pattern(length), cyc)


def find_odd_hole(g: Graph, max_length: int) -> Optional[PatternWitness]:
    """Shortest induced odd cycle of length in ``5..max_length``."""
    for k in range(5, min(max_length, g.n) + 1, 2):
        w = find_hole(g, k)
        if w is not None:
            return w
    return None


def find_odd_antihole(g: Graph, max_length: int) -> Optional[PatternWitness]:
    """Shortest odd antihole on ``7..max_length`` vertices.

    Length 5 is left to find_odd_hole since C5 is its own complement.
    """
    co = complement(g)
    for k in range(7, min(max_length, g.n) + 1, 2):
        cyc = _find_induced_cycle(co, k)
        if cyc is not None:
            return PatternWitness(antihole_pattern(k), cyc)
    return None
