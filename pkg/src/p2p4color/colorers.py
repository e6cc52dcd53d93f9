"""Constructive colourings for (P2∪P4, X)-free graphs, X in {gem, butterfly, diamond}.

Each colourer partitions G around its lexicographically least maximum
clique, checks every structural fact its palette assignment relies on and
then paints the parts.  Palettes are written with the 1-based labels used
in the hand constructions (label ``k`` is the colour of v_k, larger labels
are fresh) and compacted to ``0..k-1`` at the end.  A failed fact raises
StructureViolation; a colouring is only returned after it has been checked
proper and within the class bound.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .clique import max_clique, max_clique_in
from .cograph import NotCograph, color_subset
from .coloring import Coloring, compact, verify_coloring
from .detect import P3, Pattern, find_induced, is_in_class, lift
from .graph import Graph, bits, components, induced, to_mask
from .wagon import (CLASS_PATTERNS, StructureViolation, WagonPartition, certify, gem_sets,
                    wagon_partition)

__all__ = [
    "Coloring", "StructureViolation", "bound", "color_gem_free", "color_butterfly_free",
    "color_diamond_free", "color", "verify_coloring", "COLORERS",
]


def bound(cls: str, omega: int) -> int:
    """Upper bound on χ for the class, as a function of ω."""
    if cls not in ("gem", "butterfly", "diamond"):
        raise ValueError(f"unknown class {cls!r}")
    if omega <= 1:
        return omega
    if cls == "gem":
        return 3 * omega - 2
    if cls == "butterfly":
        return (omega * omega + 3 * omega - 2) // 2
    return {2: 4, 3: 7, 4: 9}.get(omega, 2 * omega - 1)


class _Painter:
    """Colour bookkeeping plus the runtime checks shared by all schemes."""

    def __init__(self, g: Graph, p: WagonPartition, patterns: Sequence[Pattern]):
        self.g = g
        self.p = p
        self.patterns = patterns
        self.color: dict[int, int] = {}

    def fail(self, claim: str, evidence: Sequence[int], local: Iterable[int] = ()) -> None:
        cert = certify(self.g, self.p.omega, set(evidence) | set(local) | set(self.p.A), self.patterns)
        raise StructureViolation(claim, evidence, cert)

    # checks -----------------------------------------------------------
    def require_stable(self, s: Iterable[int], claim: str) -> None:
        mask = to_mask(s)
        for x in bits(mask):
            nb = self.g.adj_mask(x) & mask
            if nb:
                self.fail(claim, (x, (nb & -nb).bit_length() - 1))

    def require_empty(self, s: Iterable[int], claim: str) -> None:
        s = sorted(s)
        if s:
            self.fail(claim, (s[0],))

    def require_anticomplete(self, s: Iterable[int], t: Iterable[int], claim: str) -> None:
        tmask = to_mask(t)
        for x in sorted(s):
            nb = self.g.adj_mask(x) & tmask
            if nb:
                self.fail(claim, (x, (nb & -nb).bit_length() - 1))

    def require_complete(self, s: Iterable[int], t: Iterable[int], claim: str) -> None:
        t = sorted(t)
        for x in sorted(s):
            for y in t:
                if x != y and not self.g.has_edge(x, y):
                    self.fail(claim, (x, y))

    # painting ---------------------------------------------------------
    def paint(self, s: Iterable[int], label: int) -> None:
        for x in s:
            assert x not in self.color, f"vertex {x} painted twice"
            self.color[x] = label

    def paint_cograph(self, s: Iterable[int], palette: Sequence[int], claim: str,
                      local: Iterable[int] = ()) -> None:
        s = list(s)
        try:
            colors = color_subset(self.g, s)
        except NotCograph as exc:
            self.fail(claim, exc.witness.embedding, local)
        width = max(colors.values(), default=-1) + 1
        assert width <= len(palette), f"piece needs {width} colours, palette has {len(palette)}"
        for x, c in colors.items():
            self.paint([x], palette[c])

    def paint_clique(self, s: Iterable[int], palette: Sequence[int]) -> None:
        s = sorted(s)
        assert len(s) <= len(palette)
        for x, c in zip(s, palette):
            self.paint([x], c)

    def finish(self, cls: str, arm: str) -> Coloring:
        g = self.g
        missing = [v for v in range(g.n) if v not in self.color]
        assert not missing, f"vertices {missing} left uncoloured"
        coloring = Coloring(compact([self.color[v] for v in range(g.n)]), bound(cls, self.p.omega), cls, arm)
        bad = verify_coloring(g, coloring)
        assert bad is None, f"{arm}: monochromatic edge {bad}"
        assert coloring.colors_used <= coloring.bound, \
            f"{arm}: {coloring.colors_used} colours exceed bound {coloring.bound}"
        return coloring


def _prepare(g: Graph, cls: str, strict: bool) -> Optional[_Painter]:
    patterns = CLASS_PATTERNS[cls]
    if strict:
        report = is_in_class(g, patterns)
        if not report.member:
            w = report.violations()[0]
            raise StructureViolation("input is in the class", w.embedding, w,
                                     f"contains an induced {w.pattern.name}")
    A = max_clique(g)
    if A.size <= 1:
        return None
    return _Painter(g, wagon_partition(g, A), patterns)


def _trivial(g: Graph, cls: str) -> Coloring:
    # ω <= 1: no edges, one colour (none for the empty graph)
    return Coloring(tuple(0 for _ in range(g.n)), bound(cls, min(g.n, 1)), cls, "omega<=1")


def color_gem_free(g: Graph, strict: bool = False) -> Coloring:
    """Colour a (P2∪P4, gem)-free graph with at most 3ω-2 colours.

    M is complete to v_1 and N to v_2, so gem-freeness makes both
    P4-free with clique number below ω; they get disjoint palettes of
    ω-1 colours each, C[1,2] gets ω more, and v_1 borrows N's first colour.
    """
    pt = _prepare(g, "gem", strict)
    if pt is None:
        return _trivial(g, "gem")
    p = pt.p
    w = p.omega
    m, n = gem_sets(p)
    v1, v2 = p.v(1), p.v(2)
    pt.require_complete([v1], m, "v_1 complete to M")
    pt.require_complete([v2], n, "v_2 complete to N")
    pal_m = list(range(1, w))
    pal_n = list(range(w, 2 * w - 1))
    pal_c = list(range(2 * w - 1, 3 * w - 1))
    pt.paint_cograph(m, pal_m, "G[M] is P4-free", [v1])
    pt.paint_cograph(n, pal_n, "G[N] is P4-free", [v2])
    pt.paint_cograph(p.c(1, 2), pal_c, "C[1,2] is P4-free")
    pt.paint([v1], pal_n[0])
    return pt.finish("gem", "gem")


def color_butterfly_free(g: Graph, strict: bool = False) -> Coloring:
    """Colour a (P2∪P4, butterfly)-free graph with at most (ω²+3ω-2)/2 colours."""
    pt = _prepare(g, "butterfly", strict)
    if pt is None:
        return _trivial(g, "butterfly")
    p = pt.p
    w = p.omega
    for a in range(1, w + 1):
        pt.paint([p.v(a)], a)
        pt.require_stable(p.i_set(a), f"I[{a}] is stable")
        pt.paint(p.i_set(a), a)
    pt.paint_cograph(p.c(1, 2), list(range(w + 1, 2 * w + 1)), "C[1,2] is P4-free")
    fresh = 2 * w + 1
    for (i, j), s in sorted(p.C.items()):
        if j < 3 or not s:
            continue
        pt.require_stable(s, f"C[{i},{j}] is stable")
        pt.paint(s, fresh)
        fresh += 1
    return pt.finish("butterfly", "butterfly")


def _split_by_q(g: Graph, s: Iterable[int], q: Sequence[int]) -> dict[int, list[int]]:
    """Group ``s`` by the set of neighbours each vertex has in ``q`` (as a bitmask)."""
    qmask = to_mask(q)
    groups: dict[int, list[int]] = {}
    for x in sorted(s):
        groups.setdefault(g.adj_mask(x) & qmask, []).append(x)
    return groups


def color_diamond_free(g: Graph, strict: bool = False) -> Coloring:
    """Colour a (P2∪P4, diamond)-free graph within 4, 7, 9 or 2ω-1 colours.

    The returned colouring's ``arm`` names the branch that produced it.
    """
    pt = _prepare(g, "diamond", strict)
    if pt is None:
        return _trivial(g, "diamond")
    p = pt.p
    w = p.omega
    A = p.A

    if w == 2:
        pt.paint([p.v(1)], 1)
        pt.paint([p.v(2)], 2)
        for a in (1, 2):
            pt.require_stable(p.i_set(a), f"I[{a}] is stable")
            pt.paint(p.i_set(a), a)
        pt.paint_cograph(p.c(1, 2), [3, 4], "C[1,2] is P4-free")
        return pt.finish("diamond", "omega=2")

    for (i, j), s in sorted(p.C.items()):
        if j >= 4:
            pt.require_empty(s, f"C[{i},{j}] is empty")
    for a, s in sorted(p.I.items()):
        pt.require_empty(s, f"I[{a}] is empty")
    c12, c13, c23 = p.c(1, 2), p.c(1, 3), p.c(2, 3)
    pt.require_anticomplete(c13, [v for k, v in enumerate(A, 1) if k != 2], "C[1,3] anticomplete to A - v_2")
    pt.require_anticomplete(c23, [v for k, v in enumerate(A, 1) if k != 1], "C[2,3] anticomplete to A - v_1")
    # v_2 complete to C[1,3] and v_1 complete to C[2,3] hold by construction of the partition

    if w == 3:
        for k in range(1, 4):
            pt.paint([p.v(k)], k)
        pt.paint_cograph(c12, [1, 2, 4], "C[1,2] is P4-free")
        pt.paint_cograph(c23, [3, 5], "C[2,3] is P4-free")
        pt.paint_cograph(c13, [6, 7], "C[1,3] is P4-free")
        return pt.finish("diamond", "omega=3")

    q = max_clique_in(g, c12)
    for k in range(1, w + 1):
        pt.paint([p.v(k)], k)

    if w == 4:
        if len(q) <= 3:
            pt.paint_cograph(c12, [1, 2, 5], "C[1,2] is P4-free")
            pt.paint_cograph(c13, [3, 4, 6], "C[1,3] is P4-free")
            pt.paint_cograph(c23, [7, 8, 9], "C[2,3] is P4-free")
            return pt.finish("diamond", "omega=4,|Q|<=3")
        pt.paint_cograph(c12, [1, 2, 5, 6], "C[1,2] is P4-free")
        if not c13 or not c23:
            pt.paint_cograph(c13 or c23, [3, 4, 7], "C[i,3] is P4-free")
            return pt.finish("diamond", "omega=4,|Q|=4,one side empty")
        pt.require_complete(c13, c23, "C[1,3] complete to C[2,3]")
        pt.require_stable(c13, "C[1,3] is stable")
        pt.require_stable(c23, "C[2,3] is stable")
        pt.paint(c13, 3)
        pt.paint(c23, 4)
        return pt.finish("diamond", "omega=4,|Q|=4,both sides")

    return _diamond_large(pt, q)


def _diamond_large(pt: _Painter, q: tuple[int, ...]) -> Coloring:
    g, p = pt.g, pt.p
    w = p.omega
    c12, c13, c23 = p.c(1, 2), p.c(1, 3), p.c(2, 3)
    fresh = list(range(w + 1, 2 * w))

    if len(q) <= 1:
        pt.paint(c12, 2)
        pt.paint_cograph(c13, [1] + list(range(3, w + 1)), "C[1,3] is P4-free")
        pt.paint_cograph(c23, fresh, "C[2,3] is P4-free")
        return pt.finish("diamond", "omega>=5,|Q|<=1")

    def assign_roles(swap: bool) -> tuple[frozenset, frozenset]:
        # role 1 is the side adjacent to the clique vertex painted 2
        v1, v2 = p.v(1), p.v(2)
        if swap:
            pt.color[v1], pt.color[v2] = 2, 1
            return c23, c13
        return c13, c23

    if len(q) == w:
        if c13 and c23:
            pt.fail("C[1,3] or C[2,3] is empty", (min(c13), min(c23)), q)
        r1, _ = assign_roles(bool(c23))
        pt.paint_cograph(r1, [1] + list(range(3, w + 1)), "C[i,3] is P4-free")
        pt.paint_cograph(c12, [2] + fresh, "C[1,2] is P4-free")
        return pt.finish("diamond", "omega>=5,|Q|=omega")

    if len(q) == 2:
        return _diamond_q2(pt, q, assign_roles)
    return _diamond_q_mid(pt, q, assign_roles)


def _diamond_q2(pt: _Painter, q: tuple[int, ...], assign_roles) -> Coloring:
    g, p = pt.g, pt.p
    w = p.omega
    q1, q2 = q
    key = {1 << q1: 1, 1 << q2: 2, (1 << q1) | (1 << q2): 3, 0: 4}

    def split(s):
        parts = {1: [], 2: [], 3: [], 4: []}
        for nq, xs in _split_by_q(g, s, q).items():
            parts[key[nq]].extend(xs)
        return parts

    n1, n2 = split(p.c(1, 3)), split(p.c(2, 3))
    for i, parts in ((1, n1), (2, n2)):
        for t in (1, 2, 3):
            pt.require_stable(parts[t], f"N[{i}{t}] is stable")
        pt.require_anticomplete(parts[1] + parts[2], parts[3], f"N[{i}1] u N[{i}2] anticomplete to N[{i}3]")
    if n1[4] and n2[4]:
        pt.fail("N[14] or N[24] is empty", (n1[4][0], n2[4][0]), q)
    swap = bool(n2[4])
    if swap:
        n1, n2 = n2, n1
    assign_roles(swap)

    pt.require_stable(n1[1] + n1[3], "N[11] u N[13] is stable")
    pt.require_stable(n2[1] + n2[3], "N[21] u N[23] is stable")
    pt.paint(n1[1] + n1[3], 1)
    pt.paint(n2[1] + n2[3], 2)
    pt.paint(n1[2], 3)
    pt.paint(n2[2], 4)

    small = list(range(5, w + 1)) + [w + 1, w + 2]
    large = [1, 3] + list(range(5, w + 1)) + [w + 1]
    others = n1[1] + n1[2] + n1[3]
    for comp in components(g, to_mask(n1[4])):
        members = list(bits(comp))
        if not g.is_clique(members):
            sub, index_map = induced(g, members)
            p3 = lift(find_induced(sub, P3), index_map)
            pt.fail("components of N[14] are cliques", p3.embedding, [p.v(1), p.v(2)])
        if len(members) <= w - 2:
            pt.paint_clique(members, small)
        else:
            assert len(members) == w - 1, "component larger than the clique bound allows"
            pt.require_anticomplete(members, others, "large N[14] component anticomplete to N[11] u N[12] u N[13]")
            pt.paint_clique(members, large)
    pt.paint_cograph(p.c(1, 2), [w + 3, w + 4], "C[1,2] is P4-free")
    return pt.finish("diamond", "omega>=5,|Q|=2")


def _diamond_q_mid(pt: _Painter, q: tuple[int, ...], assign_roles) -> Coloring:
    g, p = pt.g, pt.p
    w = p.omega
    qmask = to_mask(q)

    def split(s, i):
        parts = {1: [], 2: [], 3: []}
        for nq, xs in _split_by_q(g, s, q).items():
            if nq == qmask:
                parts[1].extend(xs)
            elif nq.bit_count() == 1:
                parts[2].extend(xs)
            elif nq == 0:
                parts[3].extend(xs)
            else:
                pt.fail(f"C[{i},3] vertices see all, one or none of Q", (xs[0],), q)
        return {t: sorted(v) for t, v in parts.items()}

    n1, n2 = split(p.c(1, 3), 1), split(p.c(2, 3), 2)
    for i, parts in ((1, n1), (2, n2)):
        pt.require_stable(parts[1], f"N[{i}1] is stable")
        pt.require_stable(parts[2], f"N[{i}2] is stable")
        pt.require_anticomplete(parts[1], parts[2], f"N[{i}1] anticomplete to N[{i}2]")
    if n1[3] and n2[3]:
        pt.fail("N[13] or N[23] is empty", (n1[3][0], n2[3][0]), q)
    swap = bool(n2[3])
    if swap:
        n1, n2 = n2, n1
    assign_roles(swap)
    c12 = sorted(p.c(1, 2))
    pt.require_anticomplete(c12, n1[3], "C[1,2] anticomplete to N[13]")

    pt.require_stable(n1[1] + n1[2], "N[11] u N[12] is stable")
    pt.require_stable(n2[1] + n2[2], "N[21] u N[22] is stable")
    pt.paint(n1[1] + n1[2], 1)
    pt.paint(n2[1] + n2[2], 2)
    pt.paint_cograph(c12 + n1[3], list(range(w + 1, 2 * w)), "C[1,2] u N[13] is P4-free")
    return pt.finish("diamond", "omega>=5,3<=|Q|<=omega-1")


COLORERS = {
    "gem": color_gem_free,
    "butterfly": color_butterfly_free,
    "diamond": color_diamond_free,
}


def color(g: Graph, cls: str, strict: bool = False) -> Coloring:
    try:
        fn = COLORERS[cls]
    except KeyError:
        raise ValueError(f"unknown class {cls!r}; expected one of {sorted(COLORERS)}") from None
    return fn(g, strict=strict)
