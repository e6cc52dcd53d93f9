"""Cograph (P4-free) recognition by recursive splitting, and optimal colouring.

A graph on at least two vertices that is both connected and co-connected
contains an induced P4, so the split either succeeds all the way down or
stops at a piece where the detector finds one.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .coloring import Coloring
from .detect import P4, PatternWitness, find_induced, lift
from .graph import Graph, bits, components, from_edge_list, induced, to_mask


@dataclass(frozen=True)
class Leaf:
    vertex: int


@dataclass(frozen=True)
class Union:
    children: tuple


@dataclass(frozen=True)
class Join:
    children: tuple


Cotree = Leaf | Union | Join


class NotCograph(ValueError):
    def __init__(self, witness: PatternWitness):
        super().__init__(f"induced P4 on {list(witness.embedding)}")
        self.witness = witness


def _build(g: Graph, mask: int) -> Cotree:
    if mask & (mask - 1) == 0:
        return Leaf(mask.bit_length() - 1)
    comps = components(g, mask)
    if len(comps) > 1:
        return Union(tuple(_build(g, c) for c in comps))
    cocomps = components(g, mask, complemented=True)
    if len(cocomps) > 1:
        return Join(tuple(_build(g, c) for c in cocomps))
    sub, index_map = induced(g, bits(mask))
    w = find_induced(sub, P4)
    assert w is not None, "connected and co-connected piece without a P4"
    raise NotCograph(lift(w, index_map))


def cotree(g: Graph, vertices: Optional[Iterable[int]] = None) -> Optional[Cotree]:
    """Cotree of ``g`` (or of ``g[vertices]``, leaves keep ``g``'s ids).

    Returns None for an empty vertex set; raises NotCograph with an induced
    P4 otherwise when the graph is not a cograph.
    """
    mask = g.all_mask if vertices is None else to_mask(vertices)
    if not mask:
        return None
    return _build(g, mask)


def leaves(t: Cotree) -> list[int]:
    if isinstance(t, Leaf):
        return [t.vertex]
    return [v for c in t.children for v in leaves(c)]


def evaluate(t: Optional[Cotree], n: int) -> Graph:
    """Graph on ``0..n-1`` whose edges are the joins recorded in ``t``."""
    edges: list[tuple[int, int]] = []

    def walk(node: Cotree) -> list[int]:
        if isinstance(node, Leaf):
            return [node.vertex]
        parts = [walk(c) for c in node.children]
        if isinstance(node, Join):
            for i, a in enumerate(parts):
                for b in parts[i + 1:]:
                    edges.extend((u, v) for u in a for v in b)
        return [v for p in parts for v in p]

    if t is not None:
        walk(t)
    return from_edge_list(n, edges)


def is_well_formed(t: Cotree) -> bool:
    """Internal nodes have >= 2 children and Union/Join alternate."""
    if isinstance(t, Leaf):
        return True
    if len(t.children) < 2:
        return False
    return all(type(c) is not type(t) and is_well_formed(c) for c in t.children)


def _color_tree(t: Cotree) -> tuple[dict[int, int], int]:
    if isinstance(t, Leaf):
        return {t.vertex: 0}, 1
    parts = [_color_tree(c) for c in t.children]
    colors: dict[int, int] = {}
    if isinstance(t, Union):
        parts.sort(key=lambda p: -p[1])
        for part, _ in parts:
            colors.update(part)
        return colors, parts[0][1]
    offset = 0
    for part, width in parts:
        colors.update({v: c + offset for v, c in part.items()})
        offset += width
    return colors, offset


def color_subset(g: Graph, vertices: Iterable[int]) -> dict[int, int]:
    """Optimal colouring of the cograph ``g[vertices]`` with colours ``0..ω-1``.

    Raises NotCograph (witness in ``g``'s ids) if the piece has a P4.
    """
    t = cotree(g, vertices)
    if t is None:
        return {}
    colors, _ = _color_tree(t)
    return colors


def color_cograph(g: Graph) -> Coloring:
    colors = color_subset(g, g.vertices())
    assignment = tuple(colors[v] for v in range(g.n))
    width = max(assignment, default=-1) + 1
    return Coloring(assignment, width, "cograph")
