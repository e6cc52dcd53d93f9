"""Seeded graph generators: rejection sampling inside a class, random cographs, named graphs.

Randomness comes only from ``random.Random(seed)``.  A G(n, p) draw
consumes exactly one ``random()`` per vertex pair, pairs taken in
lexicographic order ``(0,1), (0,2), ..., (n-2,n-1)``; successive tries
continue the same stream.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .cograph import Cotree, Join, Leaf, Union, evaluate
from .detect import BUTTERFLY, C5, DIAMOND, GEM, P2_P4, Pattern, is_in_class, pattern
from .graph import Graph, complete, cycle, disjoint_union, from_edge_list, mycielskian, path

# Single G(n, p) densities with the best measured acceptance rate at n = 14.
DEFAULT_DENSITY = {
    "gem": 0.1,
    "butterfly": 0.85,
    "diamond": 0.1,
    "perfection": 0.1,
}

# Densities whose measured acceptance rate at n = 14 is at least about 0.3%.
# Mid-range densities almost never avoid P2∪P4 and are left out.
CORPUS_DENSITIES = {
    "gem": (0.05, 0.1, 0.15, 0.9, 0.95),
    "butterfly": (0.05, 0.1, 0.15, 0.8, 0.9, 0.95),
    "diamond": (0.05, 0.1, 0.15),
    "perfection": (0.05, 0.1, 0.15),
}

CLASS_FORBIDDEN: dict[str, tuple[Pattern, ...]] = {
    "gem": (P2_P4, GEM),
    "butterfly": (P2_P4, BUTTERFLY),
    "diamond": (P2_P4, DIAMOND),
    "perfection": (P2_P4, DIAMOND, C5),
}


class SamplingExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class GenSpec:
    n: int
    p: float
    forbidden: tuple[Pattern, ...]
    seed: int
    max_tries: int = 1000

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"edge density must lie in [0, 1], got {self.p}")
        if self.max_tries < 1:
            raise ValueError("max_tries must be at least 1")
        if self.n < 0:
            raise ValueError("n must be non-negative")


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return from_edge_list(n, edges)


def random_in_class(spec: GenSpec) -> Graph:
    """First G(n, p) draw from the seeded stream that avoids every forbidden pattern."""
    g, _ = random_in_class_with_tries(spec)
    return g


def random_in_class_with_tries(spec: GenSpec) -> tuple[Graph, int]:
    rng = random.Random(spec.seed)
    for attempt in range(1, spec.max_tries + 1):
        g = gnp(spec.n, spec.p, rng)
        if is_in_class(g, spec.forbidden).member:
            return g, attempt
    raise SamplingExhausted(f"no member found in {spec.max_tries} tries (n={spec.n}, p={spec.p})")


def planted(omega: int, extra: int, p_in: float, p_attach: float, rng: random.Random) -> Graph:
    """K_omega on ``0..omega-1`` plus ``extra`` vertices.

    Pairs are drawn in lexicographic order like :func:`gnp`; pairs inside
    the clique are fixed edges and consume no draw, pairs touching the
    clique use ``p_attach`` and pairs among the extra vertices ``p_in``.
    """
    n = omega + extra
    edges = list(combinations(range(omega), 2))
    for u, v in combinations(range(n), 2):
        if v < omega:
            continue
        if rng.random() < (p_in if u >= omega else p_attach):
            edges.append((u, v))
    return from_edge_list(n, edges)


def random_planted_in_class(omega: int, extra: int, p_in: float, p_attach: float,
                            forbidden: Sequence[Pattern], seed: int, max_tries: int = 1000) -> Graph:
    """Rejection-sample :func:`planted` graphs until one avoids ``forbidden``.

    G(n, p) members of the diamond classes rarely have large clique number
    at desk scale; planting the clique reaches the ω >= 4 constructions.
    """
    rng = random.Random(seed)
    for _ in range(max_tries):
        g = planted(omega, extra, p_in, p_attach, rng)
        if is_in_class(g, forbidden).member:
            return g
    raise SamplingExhausted(f"no planted member found in {max_tries} tries (omega={omega}, extra={extra})")


def random_cotree(n: int, seed: int) -> Cotree:
    """Random cotree with leaves ``0..n-1`` (shuffled); node kinds alternate."""
    if n < 1:
        raise ValueError("a cotree needs at least one leaf")
    rng = random.Random(seed)
    labels = list(range(n))
    rng.shuffle(labels)
    it = iter(labels)

    def build(size: int, join: bool) -> Cotree:
        if size == 1:
            return Leaf(next(it))
        k = rng.randint(2, min(size, 4))
        cuts = sorted(rng.sample(range(1, size), k - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [size])]
        kids = tuple(build(s, not join) for s in sizes)
        return Join(kids) if join else Union(kids)

    return build(n, rng.random() < 0.5)


def random_cograph(n: int, seed: int) -> Graph:
    return evaluate(random_cotree(n, seed), n)


def clique_plus_pendant(t: int) -> Graph:
    """K_t on ``0..t-1`` plus vertex ``t`` adjacent only to ``t-1``."""
    return from_edge_list(t + 1, list(complete(t).edges()) + [(t - 1, t)])


def disjoint_cliques(sizes: Sequence[int]) -> Graph:
    return disjoint_union(*(complete(s) for s in sizes))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def two_cliques_crossed() -> Graph:
    """ω = 4 instance where C[1,2] holds a 4-clique and C[1,3], C[2,3] are both non-empty.

    A = {0..3} and Q = {4..7} are 4-cliques; 4 and 5 see v_4 and v_3; 8
    sees v_2 and 6; 9 sees v_1 and 7; 8 and 9 are adjacent.  Random
    sampling at n <= 16 did not produce this configuration.
    """
    edges = list(combinations(range(4), 2)) + list(combinations(range(4, 8), 2))
    edges += [(3, 4), (2, 5), (1, 8), (6, 8), (0, 9), (7, 9), (8, 9)]
    return from_edge_list(10, edges)


def two_cliques_tail(omega: int = 5) -> Graph:
    """Two disjoint K_omega plus a vertex adjacent to v_2 and to the first vertex of the second clique.

    The extra vertex lands in C[1,3] while C[1,2] is a full ω-clique.
    """
    edges = list(combinations(range(omega), 2)) + list(combinations(range(omega, 2 * omega), 2))
    edges += [(1, 2 * omega), (omega, 2 * omega)]
    return from_edge_list(2 * omega + 1, edges)


_SIMPLE = {
    "grotzsch": lambda: mycielskian(cycle(5)),
    "two-k5s": lambda: disjoint_cliques([5, 5]),
    "petersen": petersen,
    "two-cliques-crossed": two_cliques_crossed,
    "two-cliques-tail": two_cliques_tail,
}


def named_graph(name: str) -> Graph:
    """Named graphs and patterns.

    Accepts pattern names (``p2p4``, ``diamond``, ``gem``, ``butterfly``,
    ``C5``, ``C7``, ``P4``, ``K6``, ``C9``...), ``grotzsch``, ``petersen``,
    ``two-K5s``, ``two-cliques-crossed``, ``two-cliques-tail``,
    ``clique-plus-pendant(t)`` and ``cliques(a,b,...)``.
    """
    key = name.strip().lower()
    if key in _SIMPLE:
        return _SIMPLE[key]()
    m = re.fullmatch(r"clique-plus-pendant\((\d+)\)", key)
    if m:
        return clique_plus_pendant(int(m.group(1)))
    m = re.fullmatch(r"cliques\((\d+(?:\s*,\s*\d+)*)\)", key)
    if m:
        return disjoint_cliques([int(s) for s in m.group(1).split(",")])
    m = re.fullmatch(r"p_?(\d+)", key)
    if m and key not in ("p2p4",):
        return path(int(m.group(1)))
    try:
        return pattern(key).graph
    except ValueError:
        raise ValueError(f"unknown graph name {name!r}") from None


@dataclass(frozen=True)
class CorpusConfig:
    """A seeded in-class corpus: G(n, p) draws mixed with planted-clique draws.

    Each member gets its own sub-seed from the master stream, so the corpus
    is reproducible and members are independent of each other's rejection
    counts.  Members whose sampler exhausts ``max_tries`` are skipped.
    """

    cls: str
    size: int = 200
    seed: int = 0
    n_min: int = 6
    n_max: int = 14
    planted_share: float = 0.5
    omega_range: tuple[int, int] = (3, 6)
    max_extra: int = 6
    max_tries: int = 500

    def __post_init__(self):
        if self.cls not in CLASS_FORBIDDEN:
            raise ValueError(f"unknown class {self.cls!r}; expected one of {sorted(CLASS_FORBIDDEN)}")
        if not 0 <= self.n_min <= self.n_max:
            raise ValueError("need 0 <= n_min <= n_max")
        if not 0.0 <= self.planted_share <= 1.0:
            raise ValueError("planted_share must lie in [0, 1]")


def corpus(cfg: CorpusConfig) -> list[Graph]:
    forbidden = CLASS_FORBIDDEN[cfg.cls]
    master = random.Random(cfg.seed)
    out: list[Graph] = []
    budget = 20 * cfg.size
    while len(out) < cfg.size and budget:
        budget -= 1
        sub = master.getrandbits(32)
        n = master.randint(cfg.n_min, cfg.n_max)
        try:
            if master.random() < cfg.planted_share:
                omega = master.randint(*cfg.omega_range)
                extra = master.randint(max(0, cfg.n_min - omega), max(0, min(cfg.max_extra, cfg.n_max - omega)))
                p_in = master.choice((0.1, 0.3, 0.5, 0.7, 0.9))
                p_attach = master.choice((0.1, 0.2, 0.3))
                g = random_planted_in_class(omega, extra, p_in, p_attach, forbidden, sub, cfg.max_tries)
            else:
                p = master.choice(CORPUS_DENSITIES[cfg.cls])
                g = random_in_class(GenSpec(n, p, forbidden, sub, cfg.max_tries))
        except SamplingExhausted:
            continue
        out.append(g)
    if len(out) < cfg.size:
        raise SamplingExhausted(f"corpus for {cfg.cls} reached only {len(out)} of {cfg.size} members")
    return out
