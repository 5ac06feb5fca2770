"""Text serializations for graphs and colorings.

Edge list
    one edge per line, ``i,l -- p,r`` with 0-based part and slot indices.
Coloring file
    a header line ``shape j s`` followed by one line per edge of
    ``K_{j x s}``: ``i,l -- p,r R`` or ``i,l -- p,r B``. Blank lines and
    lines starting with ``#`` are ignored.
DOT
    vertices named ``v_i_l``, one ``cluster_i`` subgraph per partite set;
    colorings carry ``color=red|blue`` on every edge.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import ParseError, PreconditionError
from .graph import Color, MpGraph, Shape, TwoColoring, Vertex

__all__ = [
    "format_edge",
    "graph_to_edgelist",
    "graph_from_edgelist",
    "graph_to_dot",
    "coloring_to_text",
    "coloring_from_text",
    "read_coloring",
    "coloring_to_dot",
]

_EDGE_RE = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*--\s*(\d+)\s*,\s*(\d+)\s*(?:([RB])\s*)?$")
_HEADER_RE = re.compile(r"^\s*shape\s+(\d+)\s+(\d+)\s*$")


def format_edge(u: Vertex, v: Vertex) -> str:
    return f"{u.part},{u.slot} -- {v.part},{v.slot}"


def graph_to_edgelist(g: MpGraph) -> str:
    return "".join(format_edge(u, v) + "\n" for u, v in g.vertex_edges())


def graph_from_edgelist(shape: Shape, text: str) -> MpGraph:
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        mt = _EDGE_RE.match(line)
        if mt is None or mt.group(5) is not None:
            raise ParseError(f"line {lineno}: expected 'i,l -- p,r', got {line!r}")
        i, l, p, r = map(int, mt.groups()[:4])
        edges.append(((i, l), (p, r)))
    try:
        return MpGraph.from_edges(shape, edges)
    except PreconditionError as exc:
        raise ParseError(str(exc)) from exc


def _dot_clusters(shape: Shape) -> list[str]:
    lines = []
    for i in range(shape.j):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="V_{i}";')
        for l in range(shape.s):
            lines.append(f"    v_{i}_{l};")
        lines.append("  }")
    return lines


def graph_to_dot(g: MpGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"] + _dot_clusters(g.shape)
    for u, v in g.vertex_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def coloring_to_dot(c: TwoColoring, name: str = "coloring") -> str:
    lines = [f"graph {name} {{"] + _dot_clusters(c.shape)
    vx = c.shape.vertex
    for (a, b), color in c.items():
        lines.append(f"  {vx(a)} -- {vx(b)} [color={color.label}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def coloring_to_text(c: TwoColoring) -> str:
    vx = c.shape.vertex
    out = [f"shape {c.shape.j} {c.shape.s}\n"]
    for (a, b), color in c.items():
        out.append(f"{format_edge(vx(a), vx(b))} {color.value}\n")
    return "".join(out)


def coloring_from_text(text: str) -> TwoColoring:
    """Parse a coloring file, checking that every host edge is colored exactly once."""
    shape = None
    seen: dict[tuple[int, int], Color] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if shape is None:
            mh = _HEADER_RE.match(line)
            if mh is None:
                raise ParseError(f"line {lineno}: expected header 'shape j s'")
            try:
                shape = Shape(int(mh.group(1)), int(mh.group(2)))
            except PreconditionError as exc:
                raise ParseError(f"line {lineno}: {exc}") from exc
            continue
        mt = _EDGE_RE.match(line)
        if mt is None or mt.group(5) is None:
            raise ParseError(f"line {lineno}: expected 'i,l -- p,r R|B', got {line!r}")
        i, l, p, r = map(int, mt.groups()[:4])
        try:
            a, b = shape.flat((i, l)), shape.flat((p, r))
        except PreconditionError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        if a // shape.s == b // shape.s:
            raise ParseError(f"line {lineno}: endpoints lie in the same part")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"line {lineno}: edge colored twice")
        seen[key] = Color(mt.group(5))
    if shape is None:
        raise ParseError("empty coloring file")
    missing = [e for e in shape.edges() if e not in seen]
    if missing:
        u, v = map(shape.vertex, missing[0])
        raise ParseError(f"{len(missing)} edges uncolored, first {format_edge(u, v)}")
    return TwoColoring(shape, tuple(seen[e] for e in shape.edges()))


def read_coloring(path: str | Path) -> TwoColoring:
    return coloring_from_text(Path(path).read_text())
