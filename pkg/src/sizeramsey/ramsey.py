"""Size Ramsey multipartite numbers ``m_j(S_n, S_m)`` for pairs of stars.

All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .factory import near_regular_subgraph, regular_subgraph
from .errors import NotAWitness, PreconditionError, ThresholdExceeded
from .graph import Color, Shape, TwoColoring, Vertex, color_subgraph

__all__ = [
    "Branch",
    "RamseyQuery",
    "RamseyAnswer",
    "ceil_div",
    "upper_bound",
    "lower_bound",
    "special_branch_applies",
    "size_ramsey",
    "witness_degree",
    "witness_coloring",
    "coloring_is_good",
    "find_violation",
    "handshake_blocks",
]


def ceil_div(a: int, b: int) -> int:
    if a < 0 or b <= 0:
        raise PreconditionError("ceil_div expects a >= 0 and b > 0")
    return (a + b - 1) // b


class Branch(str, enum.Enum):
    TRIVIAL_STAR = "TrivialStar"
    SPECIAL_ODD_CASE = "SpecialOddCase"
    GENERAL = "General"


@dataclass(frozen=True)
class RamseyQuery:
    j: int
    n: int
    m: int

    def __post_init__(self) -> None:
        if self.j < 3:
            raise PreconditionError(f"j must be >= 3, got {self.j}")
        if self.n < 2 or self.m < 2:
            raise PreconditionError(f"n and m must be >= 2, got n={self.n}, m={self.m}")


@dataclass(frozen=True)
class RamseyAnswer:
    j: int
    n: int
    m: int
    value: int
    branch: Branch
    lower: int | None = None
    upper: int | None = None

    @property
    def bounds(self) -> tuple[int | None, int | None]:
        return self.lower, self.upper

    def to_dict(self) -> dict:
        return {
            "j": self.j,
            "n": self.n,
            "m": self.m,
            "value": self.value,
            "branch": self.branch.value,
            "lower": self.lower,
            "upper": self.upper,
        }


def _query(q: RamseyQuery | tuple[int, int, int], need3: bool = True) -> RamseyQuery:
    if not isinstance(q, RamseyQuery):
        q = RamseyQuery(*q)
    if need3 and (q.n < 3 or q.m < 3):
        raise PreconditionError(f"the bounds need n, m >= 3, got n={q.n}, m={q.m}")
    return q


def upper_bound(q: RamseyQuery | tuple[int, int, int]) -> int:
    """``ceil((n + m - 3) / (j - 1))``: at this ``s`` every vertex has
    blue degree at least ``m - 1`` once its red degree is below ``n - 1``."""
    q = _query(q)
    return ceil_div(q.n + q.m - 3, q.j - 1)


def lower_bound(q: RamseyQuery | tuple[int, int, int]) -> int:
    q = _query(q)
    return ceil_div(q.n + q.m - 4, q.j - 1)


def special_branch_applies(q: RamseyQuery | tuple[int, int, int]) -> bool:
    """True when ``(j-1)`` divides ``n + m - 4`` and ``j``, ``n`` and the
    quotient are all odd."""
    q = _query(q)
    sq, r = divmod(q.n + q.m - 4, q.j - 1)
    return r == 0 and q.j % 2 == 1 and q.n % 2 == 1 and sq % 2 == 1


def size_ramsey(q: RamseyQuery | tuple[int, int, int]) -> RamseyAnswer:
    """Exact value of ``m_j(S_n, S_m)``.

    >>> size_ramsey((3, 5, 5)).value
    3
    """
    q = _query(q, need3=False)
    j, n, m = q.j, q.n, q.m
    if n == 2 or m == 2:
        return RamseyAnswer(j, n, m, ceil_div(max(n, m) - 1, j - 1), Branch.TRIVIAL_STAR)
    lo, hi = lower_bound(q), upper_bound(q)
    if special_branch_applies(q):
        return RamseyAnswer(j, n, m, lo, Branch.SPECIAL_ODD_CASE, lo, hi)
    return RamseyAnswer(j, n, m, hi, Branch.GENERAL, lo, hi)


def handshake_blocks(shape: Shape, n: int) -> bool:
    """True iff no spanning subgraph has every red degree equal to ``n - 2``."""
    if n < 3:
        raise PreconditionError("n must be >= 3")
    return (shape.j * shape.s * (n - 2)) % 2 == 1


def find_violation(c: TwoColoring, n: int, m: int) -> tuple[Vertex, Color, int] | None:
    """First vertex carrying a red ``S_n`` or a blue ``S_m``, if any."""
    if n < 2 or m < 2:
        raise PreconditionError("n and m must be >= 2")
    red = color_subgraph(c, Color.RED).degree_list
    host = c.shape.host_degree
    for x, dr in enumerate(red):
        if dr > n - 2:
            return c.shape.vertex(x), Color.RED, dr
        if host - dr > m - 2:
            return c.shape.vertex(x), Color.BLUE, host - dr
    return None


def coloring_is_good(c: TwoColoring, n: int, m: int) -> bool:
    """True iff ``c`` has neither a red ``S_n`` nor a blue ``S_m``."""
    return find_violation(c, n, m) is None


def witness_degree(shape: Shape, n: int) -> int:
    """Red degree used by :func:`witness_coloring`.

    ``n - 2`` capped at the host degree ``(j-1)*s``, lowered by one when the
    handshake lemma forbids it.
    """
    d = min(n - 2, shape.host_degree)
    if (shape.j * shape.s * d) % 2:
        d -= 1
    return d


def witness_coloring(shape: Shape, n: int, m: int) -> TwoColoring:
    """A coloring of ``K_{j x s}`` with no red ``S_n`` and no blue ``S_m``.

    Red is the (near-)regular construction of degree :func:`witness_degree`,
    blue is its complement. The coloring is verified before it is returned.

    Raises
    ------
    ThresholdExceeded
        If ``s >= m_j(S_n, S_m)``, where no such coloring exists.
    NotAWitness
        If the generated coloring fails verification.
    """
    if n < 3 or m < 3:
        raise PreconditionError("witness colorings need n, m >= 3")
    value = size_ramsey(RamseyQuery(shape.j, n, m)).value
    if shape.s >= value:
        raise ThresholdExceeded(shape.j, shape.s, n, m, value)
    # cap at the host degree; near_regular_subgraph handles the parity fallback
    d = min(n - 2, shape.host_degree)
    red = near_regular_subgraph(shape.j, shape.s, d) if d >= 1 else regular_subgraph(shape.j, shape.s, 0)
    c = TwoColoring.from_red(shape, red.edges)
    bad = find_violation(c, n, m)
    if bad is not None:
        raise NotAWitness(*bad)
    return c
