from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .graph import Graph


@dataclass(frozen=True)
class Coloring:
    """A total vertex colouring with 0-based colour indices.

    ``bound`` is the bound the producer promised, ``class_tag`` names the
    producer (``"gem"``, ``"butterfly"``, ``"diamond"``, ``"cograph"``,
    ``"oracle"``) and ``arm`` records which construction branch ran.
    """

    assignment: tuple[int, ...]
    bound: int
    class_tag: str
    arm: Optional[str] = None

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment))

    def is_compact(self) -> bool:
        return set(self.assignment) == set(range(self.colors_used))

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(max(self.assignment, default=-1) + 1)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out

    def to_dict(self) -> dict:
        d = {
            "class": self.class_tag,
            "bound": self.bound,
            "colors_used": self.colors_used,
            "assignment": list(self.assignment),
        }
        if self.arm is not None:
            d["arm"] = self.arm
        return d


def compact(assignment: Sequence[int]) -> tuple[int, ...]:
    """Renumber colours to ``0..k-1`` keeping their relative order."""
    used = sorted(set(assignment))
    rank = {c: i for i, c in enumerate(used)}
    return tuple(rank[c] for c in assignment)


def verify_coloring(g: Graph, c: Union[Coloring, Sequence[Optional[int]]]) -> Optional[tuple[int, int]]:
    """Return the least monochromatic edge, or None if the colouring is proper.

    Raises ValueError if the assignment does not cover every vertex.
    """
    assignment = c.assignment if isinstance(c, Coloring) else c
    if len(assignment) != g.n or any(x is None for x in assignment):
        raise ValueError("colouring must assign a colour to every vertex")
    for u, v in g.edges():
        if assignment[u] == assignment[v]:
            return (u, v)
    return None
