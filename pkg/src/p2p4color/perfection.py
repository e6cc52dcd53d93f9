"""Perfection of (P2∪P4, diamond, C5)-free graphs with ω >= 5.

Odd holes of length >= 9 contain an induced P2∪P4 and odd antiholes on
>= 7 vertices contain a diamond, so for graphs in the class the only
obstruction left by the Strong Perfect Graph Theorem is an induced C7,
which such graphs do not have.  certify_perfect checks the hypotheses
and the absence of C7, then corroborates with direct odd hole and odd
antihole scans.  exhaustive_perfection is the brute-force cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .clique import clique_number
from .detect import C5, C7, DIAMOND, P2_P4, ClassReport, PatternWitness, find_induced, find_odd_antihole, \
    find_odd_hole, is_in_class
from .graph import Graph
from .oracle import OracleRefused, OracleResult, chromatic_number, subset_tables

PERFECT = "perfect"
NOT_APPLICABLE = "not-applicable"
REFUTED = "refuted"

HYPOTHESIS_PATTERNS = (P2_P4, DIAMOND, C5)


@dataclass(frozen=True)
class PerfectionCertificate:
    omega: int
    class_check: ClassReport
    c7: Optional[PatternWitness]
    odd_hole: Optional[PatternWitness]
    odd_antihole: Optional[PatternWitness]
    conclusion: str
    reason: str = ""
    scanned: bool = False

    @property
    def witness(self) -> Optional[PatternWitness]:
        if self.conclusion == REFUTED:
            return self.c7 or self.odd_hole or self.odd_antihole
        if self.conclusion == NOT_APPLICABLE:
            v = self.class_check.violations()
            return v[0] if v else None
        return None

    def to_dict(self) -> dict:
        def show(w):
            return "absent" if w is None else w.to_dict()

        d = {
            "conclusion": self.conclusion,
            "omega": self.omega,
            "class_check": self.class_check.to_dict(),
            "c7": show(self.c7) if self.conclusion != NOT_APPLICABLE or self.c7 else "not-run",
        }
        if self.scanned:
            d["odd_hole_scan"] = show(self.odd_hole)
            d["odd_antihole_scan"] = show(self.odd_antihole)
        if self.reason:
            d["reason"] = self.reason
        return d


def certify_perfect(g: Graph, corroborate: bool = True) -> PerfectionCertificate:
    report = is_in_class(g, HYPOTHESIS_PATTERNS)
    omega = clique_number(g)
    reasons = [f"contains an induced {w.pattern.name}" for w in report.violations()]
    if omega < 5:
        reasons.append(f"clique number {omega} < 5")
    if reasons:
        return PerfectionCertificate(omega, report, None, None, None, NOT_APPLICABLE, "; ".join(reasons))
    c7 = find_induced(g, C7)
    if c7 is not None:
        return PerfectionCertificate(omega, report, c7, None, None, REFUTED,
                                     "induced C7 in a graph satisfying the hypotheses")
    hole = antihole = None
    if corroborate:
        hole = find_odd_hole(g, g.n)
        antihole = find_odd_antihole(g, g.n)
        if hole is not None or antihole is not None:
            return PerfectionCertificate(omega, report, None, hole, antihole, REFUTED,
                                         "direct scan found an odd hole or odd antihole", True)
    return PerfectionCertificate(omega, report, None, hole, antihole, PERFECT,
                                 "hypotheses hold and no induced C7", corroborate)


def exhaustive_perfection(g: Graph, max_n: int = 12) -> bool:
    """True iff χ(H) = ω(H) for every induced subgraph H of ``g``.

    Scans all 2^n vertex subsets; refuses (OracleRefused) above ``max_n``.
    """
    if g.n > max_n:
        raise OracleRefused(f"exhaustive perfection check limited to {max_n} vertices, got {g.n}")
    chi, omega = subset_tables(g, max_n=max_n)
    return chi == omega


def omega_coloring(g: Graph) -> OracleResult:
    """An optimal colouring from the exact oracle (χ = ω for perfect inputs)."""
    return chromatic_number(g)
