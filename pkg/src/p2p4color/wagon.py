"""Partition of V(G) around a maximum clique A = (v_1, ..., v_ω).

Every vertex outside A either misses at least two clique vertices, and
goes to C[i, j] for the lexicographically least pair of missed indices,
or misses exactly one, v_a, and goes to I[a].  Pair and singleton keys
are 1-based so that ``C[1, 3]`` reads the way the colouring arguments are
usually written; ``A[0]`` is v_1.

The structural facts the colourings depend on are checked by
:func:`verify_structure`.  A failed fact always carries a certificate
(an induced forbidden pattern or a clique larger than ω) when one exists
near the offending vertices or anywhere in G.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .clique import CliqueResult
from .cograph import NotCograph, cotree
from .detect import (BUTTERFLY, DIAMOND, GEM, P2_P4, Pattern, PatternWitness, clique_pattern,
                     find_induced, lift)
from .graph import Graph, bits, induced, to_mask

CLASS_PATTERNS: dict[str, tuple[Pattern, ...]] = {
    "gem": (P2_P4, GEM),
    "butterfly": (P2_P4, BUTTERFLY),
    "diamond": (P2_P4, DIAMOND),
}


class StructureViolation(Exception):
    """A structural fact failed.

    ``evidence`` lists the offending vertices (re-checkable against the
    fact itself); ``certificate`` is a forbidden induced subgraph or an
    oversized clique explaining why the input cannot be in the class.
    """

    def __init__(self, claim: str, evidence: Sequence[int] = (),
                 certificate: Optional[PatternWitness] = None, detail: str = ""):
        msg = f"{claim} violated at {list(evidence)}"
        if detail:
            msg += f": {detail}"
        if certificate is not None:
            msg += f" (certificate: {certificate.pattern.name} on {list(certificate.embedding)})"
        super().__init__(msg)
        self.claim = claim
        self.evidence = tuple(evidence)
        self.certificate = certificate
        self.detail = detail

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "evidence": list(self.evidence),
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "detail": self.detail,
        }


class NotMaximumClique(StructureViolation):
    pass


@dataclass(frozen=True)
class WagonPartition:
    A: tuple[int, ...]
    C: dict[tuple[int, int], frozenset[int]]
    I: dict[int, frozenset[int]]

    @property
    def omega(self) -> int:
        return len(self.A)

    def v(self, i: int) -> int:
        """Clique vertex v_i (1-based)."""
        return self.A[i - 1]

    def c(self, i: int, j: int) -> frozenset[int]:
        return self.C.get((i, j), frozenset())

    def i_set(self, a: int) -> frozenset[int]:
        return self.I.get(a, frozenset())

    def part_of(self, x: int) -> str:
        if x in self.A:
            return f"A[{self.A.index(x) + 1}]"
        for (i, j), s in self.C.items():
            if x in s:
                return f"C[{i},{j}]"
        for a, s in self.I.items():
            if x in s:
                return f"I[{a}]"
        raise KeyError(x)

    def summary(self) -> dict:
        return {
            "A": list(self.A),
            "C": {f"{i},{j}": sorted(s) for (i, j), s in sorted(self.C.items()) if s},
            "I": {str(a): sorted(s) for a, s in sorted(self.I.items()) if s},
        }


def _clique_certificate(g: Graph, vertices: Iterable[int]) -> PatternWitness:
    vs = tuple(sorted(vertices))
    return PatternWitness(clique_pattern(len(vs)), vs)


def wagon_partition(g: Graph, A: CliqueResult | Sequence[int]) -> WagonPartition:
    """Partition ``g`` around the clique ``A`` (taken in the given order).

    Raises NotMaximumClique if some vertex is adjacent to all of A.
    """
    clique = tuple(A.members if isinstance(A, CliqueResult) else A)
    if not g.is_clique(clique):
        raise ValueError(f"{list(clique)} is not a clique")
    omega = len(clique)
    in_a = to_mask(clique)
    C = {(i, j): set() for i in range(1, omega + 1) for j in range(i + 1, omega + 1)}
    I = {a: set() for a in range(1, omega + 1)}
    for x in range(g.n):
        if in_a >> x & 1:
            continue
        nx = g.adj_mask(x)
        missed = [k for k, v in enumerate(clique, 1) if not nx >> v & 1]
        if len(missed) >= 2:
            C[missed[0], missed[1]].add(x)
        elif len(missed) == 1:
            I[missed[0]].add(x)
        else:
            raise NotMaximumClique("A is a maximum clique", (x,), _clique_certificate(g, clique + (x,)),
                                   "vertex adjacent to every clique vertex")
    return WagonPartition(clique, {k: frozenset(s) for k, s in C.items()},
                          {k: frozenset(s) for k, s in I.items()})


def check_partition(g: Graph, p: WagonPartition) -> None:
    """Assert the defining invariants of a partition of ``g``."""
    seen = set(p.A)
    assert len(seen) == len(p.A)
    for s in list(p.C.values()) + list(p.I.values()):
        assert not seen & s, "parts overlap"
        seen |= s
    assert seen == set(range(g.n)), "parts do not cover V(G)"
    for (i, j), s in p.C.items():
        for x in s:
            assert not g.has_edge(x, p.v(i)) and not g.has_edge(x, p.v(j))
            # lexicographic minimality: every earlier index except i is a neighbour
            for k in range(1, j):
                if k != i:
                    assert g.has_edge(x, p.v(k)), f"{x} in C[{i},{j}] misses v_{k}"
    for a, s in p.I.items():
        for x in s:
            assert not g.has_edge(x, p.v(a))
            assert all(g.has_edge(x, p.v(k)) for k in range(1, p.omega + 1) if k != a)


def certify(g: Graph, omega: int, local: Iterable[int], patterns: Sequence[Pattern],
            search_whole: bool = True) -> Optional[PatternWitness]:
    """Look for a certificate near ``local``, then (optionally) in all of ``g``.

    Tries a clique on ω+1 vertices first, then each forbidden pattern.
    """
    sub, index_map = induced(g, local)
    for pat in (clique_pattern(omega + 1),) + tuple(patterns):
        w = find_induced(sub, pat)
        if w is not None:
            return lift(w, index_map)
    if search_whole:
        for pat in patterns:
            w = find_induced(g, pat)
            if w is not None:
                return w
    return None


@dataclass(frozen=True)
class Fact:
    claim: str
    holds: bool
    evidence: tuple[int, ...] = ()
    certificate: Optional[PatternWitness] = None

    def to_dict(self) -> dict:
        if self.holds:
            return {"claim": self.claim, "status": "holds"}
        return {
            "claim": self.claim,
            "status": "violated",
            "evidence": list(self.evidence),
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
        }


@dataclass
class StructureReport:
    facts: list[Fact] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(f.holds for f in self.facts)

    def violations(self) -> list[Fact]:
        return [f for f in self.facts if not f.holds]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "facts": [f.to_dict() for f in self.facts]}


class _Checker:
    def __init__(self, g: Graph, p: WagonPartition, patterns: Sequence[Pattern]):
        self.g, self.p, self.patterns = g, p, patterns
        self.report = StructureReport()

    def record(self, claim: str, evidence: Optional[Sequence[int]], local: Iterable[int] = ()) -> None:
        if evidence is None:
            self.report.facts.append(Fact(claim, True))
            return
        cert = certify(self.g, self.p.omega, set(local) | set(evidence) | set(self.p.A), self.patterns)
        self.report.facts.append(Fact(claim, False, tuple(evidence), cert))

    def edge_inside(self, s: Iterable[int]) -> Optional[tuple[int, int]]:
        mask = to_mask(s)
        for x in bits(mask):
            nb = self.g.adj_mask(x) & mask
            if nb:
                return (x, (nb & -nb).bit_length() - 1)
        return None

    def p4_inside(self, s: Iterable[int]) -> Optional[tuple[int, ...]]:
        try:
            cotree(self.g, s)
        except NotCograph as exc:
            return exc.witness.embedding
        return None

    def missing_edge(self, v: int, s: Iterable[int]) -> Optional[tuple[int, int]]:
        for x in sorted(s):
            if not self.g.has_edge(v, x):
                return (v, x)
        return None

    def present_edge(self, s: Iterable[int], t: Iterable[int]) -> Optional[tuple[int, int]]:
        tmask = to_mask(t)
        for x in sorted(s):
            nb = self.g.adj_mask(x) & tmask
            if nb:
                return (x, (nb & -nb).bit_length() - 1)
        return None


def gem_sets(p: WagonPartition) -> tuple[frozenset[int], frozenset[int]]:
    """The two sets M (complete to v_1) and N (complete to v_2)."""
    w = p.omega
    m = set(p.A[1:])
    for k in range(2, w + 1):
        m |= p.i_set(k)
    for (i, j), s in p.C.items():
        if i >= 2:
            m |= s
    n = set(p.i_set(1))
    for j in range(3, w + 1):
        n |= p.c(1, j)
    return frozenset(m), frozenset(n)


def verify_structure(g: Graph, p: WagonPartition, cls: str) -> StructureReport:
    """Check the structural facts used by the colouring for class ``cls``."""
    if cls not in CLASS_PATTERNS:
        raise ValueError(f"unknown class {cls!r}; expected one of {sorted(CLASS_PATTERNS)}")
    ck = _Checker(g, p, CLASS_PATTERNS[cls])
    w = p.omega

    for (i, j), s in sorted(p.C.items()):
        ck.record(f"C[{i},{j}] is P4-free", ck.p4_inside(s))
    for a, s in sorted(p.I.items()):
        ck.record(f"I[{a}] is stable", ck.edge_inside(s))

    if cls == "gem" and w >= 2:
        m, n = gem_sets(p)
        v1, v2 = p.v(1), p.v(2)
        ck.record("v_1 complete to M", ck.missing_edge(v1, m))
        ck.record("v_2 complete to N", ck.missing_edge(v2, n))
        ck.record("G[M] is P4-free", ck.p4_inside(m), [v1])
        ck.record("G[N] is P4-free", ck.p4_inside(n), [v2])

    if cls == "butterfly":
        for (i, j), s in sorted(p.C.items()):
            if j >= 3:
                ck.record(f"C[{i},{j}] is stable", ck.edge_inside(s))

    if cls == "diamond" and w >= 2:
        for (i, j), s in sorted(p.C.items()):
            if j >= 4:
                ck.record(f"C[{i},{j}] is empty", tuple(sorted(s))[:1] or None)
        if w >= 3:
            for a, s in sorted(p.I.items()):
                ck.record(f"I[{a}] is empty", tuple(sorted(s))[:1] or None)
            c13, c23 = p.c(1, 3), p.c(2, 3)
            ck.record("v_2 complete to C[1,3]", ck.missing_edge(p.v(2), c13))
            ck.record("v_1 complete to C[2,3]", ck.missing_edge(p.v(1), c23))
            rest13 = [v for k, v in enumerate(p.A, 1) if k != 2]
            rest23 = [v for k, v in enumerate(p.A, 1) if k != 1]
            ck.record("C[1,3] anticomplete to A - v_2", ck.present_edge(c13, rest13))
            ck.record("C[2,3] anticomplete to A - v_1", ck.present_edge(c23, rest23))
        amask = to_mask(p.A)
        bad = next((x for x in sorted(p.c(1, 2)) if (g.adj_mask(x) & amask).bit_count() > 1), None)
        ck.record("C[1,2] vertices have at most one neighbour in A",
                  None if bad is None else (bad,))
    return ck.report
