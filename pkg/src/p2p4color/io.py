"""Graph interchange: DIMACS ``.col`` and a small JSON object format."""
from __future__ import annotations

import json
from pathlib import Path

from .graph import Graph, from_edge_list


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS edge format (``c`` comments, ``p edge n m``, 1-based ``e u v``)."""
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise GraphFormatError("second problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphFormatError(f"expected 'p edge <n> <m>', got {raw.strip()!r}", lineno)
            try:
                n, _m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise GraphFormatError(f"non-integer size in {raw.strip()!r}", lineno) from None
            if n < 0:
                raise GraphFormatError("negative vertex count", lineno)
        elif kind == "e":
            if n is None:
                raise GraphFormatError("edge line before the 'p' line", lineno)
            if len(tokens) != 3:
                raise GraphFormatError(f"expected 'e <u> <v>', got {raw.strip()!r}", lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphFormatError(f"non-integer endpoint in {raw.strip()!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"endpoint outside 1..{n} in {raw.strip()!r}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge <n> <m>' line")
    return from_edge_list(n, edges)


def render_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphFormatError('expected an object {"n": int, "edges": [[u, v], ...]}')
    n, edges = data["n"], data["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise GraphFormatError('"n" must be an integer and "edges" a list')
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphFormatError(f"malformed edge {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return from_edge_list(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def render_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]})


def guess_format(path: str | Path) -> str:
    return "dimacs" if Path(path).suffix.lower() in (".col", ".dimacs", ".txt") else "json"


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    text = Path(path).read_text()
    fmt = fmt or guess_format(path)
    return parse_dimacs(text) if fmt == "dimacs" else parse_json(text)


def write_graph(g: Graph, path: str | Path, fmt: str | None = None) -> None:
    fmt = fmt or guess_format(path)
    Path(path).write_text(render_dimacs(g) if fmt == "dimacs" else render_json(g) + "\n")
