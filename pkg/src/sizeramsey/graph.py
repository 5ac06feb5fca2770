"""Complete balanced multipartite graphs ``K_{j x s}`` and their spanning subgraphs.

Vertex ``(part, slot)`` is linearised to the flat index ``part * s + slot``.
Edges are stored as pairs of flat indices with the smaller index first, and
the edges of ``K_{j x s}`` are numbered in ascending lexicographic order of
those pairs; that numbering is the canonical edge index used by colorings
and by the arrowing search.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, NamedTuple

from .errors import PreconditionError

__all__ = [
    "Shape",
    "Vertex",
    "Color",
    "MpGraph",
    "TwoColoring",
    "complete_graph",
    "empty_graph",
    "degree",
    "degrees",
    "is_regular",
    "max_degree",
    "star_free",
    "color_subgraph",
    "validate_graph",
]

Edge = tuple[int, int]


class Vertex(NamedTuple):
    part: int
    slot: int

    def __str__(self) -> str:
        return f"v_{self.part}_{self.slot}"


@dataclass(frozen=True, order=True)
class Shape:
    """``j`` partite sets of ``s`` vertices each."""

    j: int
    s: int

    def __post_init__(self) -> None:
        if self.j < 2 or self.s < 1:
            raise PreconditionError(f"invalid shape j={self.j}, s={self.s}")

    @property
    def order(self) -> int:
        return self.j * self.s

    @property
    def host_degree(self) -> int:
        """Degree of every vertex of the complete graph, ``(j-1)*s``."""
        return (self.j - 1) * self.s

    @property
    def size(self) -> int:
        return self.s * self.s * self.j * (self.j - 1) // 2

    def flat(self, v: Vertex | tuple[int, int]) -> int:
        part, slot = v
        if not (0 <= part < self.j and 0 <= slot < self.s):
            raise PreconditionError(f"vertex {tuple(v)} outside shape ({self.j}, {self.s})")
        return part * self.s + slot

    def vertex(self, x: int) -> Vertex:
        if not 0 <= x < self.order:
            raise PreconditionError(f"flat index {x} outside [0, {self.order - 1}]")
        return Vertex(*divmod(x, self.s))

    def vertices(self) -> Iterator[Vertex]:
        for x in range(self.order):
            yield Vertex(*divmod(x, self.s))

    def edges(self) -> tuple[Edge, ...]:
        """All edges of ``K_{j x s}`` in canonical order."""
        return _host_edges(self.j, self.s)

    def edge_index(self) -> dict[Edge, int]:
        return _host_edge_index(self.j, self.s)


@lru_cache(maxsize=None)
def _host_edges(j: int, s: int) -> tuple[Edge, ...]:
    n = j * s
    return tuple((a, b) for a in range(n) for b in range(a + 1, n) if a // s != b // s)


@lru_cache(maxsize=None)
def _host_edge_index(j: int, s: int) -> dict[Edge, int]:
    return {e: k for k, e in enumerate(_host_edges(j, s))}


class Color(str, enum.Enum):
    RED = "R"
    BLUE = "B"

    @property
    def label(self) -> str:
        return self.name.lower()


def _canonical(shape: Shape, e: tuple) -> Edge:
    a, b = e
    if not isinstance(a, int):
        a = shape.flat(a)
    if not isinstance(b, int):
        b = shape.flat(b)
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class MpGraph:
    """A spanning subgraph of ``K_{j x s}``.

    ``edges`` holds canonical flat-index pairs. Construction validates that
    the graph is simple and never joins two vertices of the same part.
    """

    shape: Shape
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        validate_graph(self.shape, self.edges)

    @classmethod
    def from_edges(cls, shape: Shape, edges: Iterable[tuple]) -> "MpGraph":
        """Build from flat pairs or ``Vertex`` pairs in either orientation."""
        canon = [_canonical(shape, e) for e in edges]
        out = frozenset(canon)
        if len(out) != len(canon):
            raise PreconditionError("repeated edge")
        return cls(shape, out)

    @cached_property
    def degree_list(self) -> tuple[int, ...]:
        deg = [0] * self.shape.order
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return tuple(deg)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def vertex_edges(self) -> list[tuple[Vertex, Vertex]]:
        v = self.shape.vertex
        return [(v(a), v(b)) for a, b in self.sorted_edges()]

    def __len__(self) -> int:
        return len(self.edges)


def validate_graph(shape: Shape, edges: Iterable[Edge]) -> None:
    """Raise :class:`PreconditionError` unless ``edges`` are canonical,
    loop-free and join distinct parts of ``shape``."""
    n, s = shape.order, shape.s
    for e in edges:
        a, b = e
        if not (0 <= a < b < n):
            raise PreconditionError(f"edge {e} is not a canonical pair within shape")
        if a // s == b // s:
            raise PreconditionError(f"edge {e} joins two vertices of part {a // s}")


def complete_graph(shape: Shape) -> MpGraph:
    return MpGraph(shape, frozenset(shape.edges()))


def empty_graph(shape: Shape) -> MpGraph:
    return MpGraph(shape, frozenset())


def degree(g: MpGraph, v: Vertex | tuple[int, int]) -> int:
    return g.degree_list[g.shape.flat(v)]


def degrees(g: MpGraph) -> dict[int, int]:
    """Degree histogram ``{degree: vertex count}``."""
    return dict(sorted(Counter(g.degree_list).items()))


def is_regular(g: MpGraph, d: int) -> bool:
    if d < 0:
        raise PreconditionError("d must be >= 0")
    return all(x == d for x in g.degree_list)


def max_degree(g: MpGraph) -> int:
    return max(g.degree_list)


def star_free(g: MpGraph, n: int) -> bool:
    """True iff ``g`` contains no star ``S_n = K_{1,n-1}``."""
    if n < 2:
        raise PreconditionError("star order n must be >= 2")
    return max_degree(g) <= n - 2


@dataclass(frozen=True)
class TwoColoring:
    """A red/blue assignment to every edge of ``K_{j x s}``.

    ``colors[k]`` is the color of the edge with canonical index ``k``, so the
    map is total by construction.
    """

    shape: Shape
    colors: tuple[Color, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != self.shape.size:
            raise PreconditionError(
                f"coloring has {len(self.colors)} entries, K_{{{self.shape.j}x{self.shape.s}}} "
                f"has {self.shape.size} edges"
            )
        if any(not isinstance(c, Color) for c in self.colors):
            raise PreconditionError("colors must be Color members")

    @classmethod
    def from_red(cls, shape: Shape, red: Iterable[tuple]) -> "TwoColoring":
        idx = shape.edge_index()
        colors = [Color.BLUE] * shape.size
        for e in red:
            ce = _canonical(shape, e)
            if ce not in idx:
                raise PreconditionError(f"{e} is not an edge of K_{{{shape.j}x{shape.s}}}")
            colors[idx[ce]] = Color.RED
        return cls(shape, tuple(colors))

    @classmethod
    def from_mask(cls, shape: Shape, bits: Iterable[int]) -> "TwoColoring":
        """From a 0/1 red-indicator sequence in canonical edge order."""
        return cls(shape, tuple(Color.RED if b else Color.BLUE for b in bits))

    @classmethod
    def uniform(cls, shape: Shape, color: Color) -> "TwoColoring":
        return cls(shape, (color,) * shape.size)

    @property
    def red_indicator(self) -> tuple[int, ...]:
        return tuple(int(c is Color.RED) for c in self.colors)

    def items(self) -> Iterator[tuple[Edge, Color]]:
        return zip(self.shape.edges(), self.colors)


def color_subgraph(c: TwoColoring, color: Color) -> MpGraph:
    return MpGraph(c.shape, frozenset(e for e, x in c.items() if x is color))
