"""Explicit d-regular spanning subgraphs of ``K_{j x s}``.

The degree ``d`` is first written in one of nine arithmetic forms
(:class:`Decomposition`), chosen by the parities of ``j``, ``s`` and ``d``.
Each form comes with a short list of *rule parts*, labelled ``a`` to ``e``:
predicates on a vertex pair ``v_{i,l}, v_{p,r}`` built from the cyclic
neighbourhoods of :mod:`sizeramsey.cyclic`. Two vertices are adjacent iff
one rule part holds. The parts of a form are pairwise disjoint and each
vertex picks up exactly ``d`` neighbours in total.

Every graph is checked for exact regularity before it is returned, and a
failure raises :class:`ConstructionInvalid` with the per-part edge counts.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from .cyclic import ball, sigma, sigma_minus, sigma_plus
from .errors import (
    ConstructionInvalid,
    DegreeTooLarge,
    NoDecomposition,
    ParityInfeasible,
    PreconditionError,
)
from .graph import MpGraph, Shape, Vertex, degrees, empty_graph

__all__ = [
    "CaseTag",
    "Decomposition",
    "ConstructionReport",
    "SweepEntry",
    "decompose",
    "rule_parts",
    "adjacency_rule",
    "matching_parts",
    "construct",
    "regular_subgraph",
    "near_regular_subgraph",
    "coverage_sweep",
]

Predicate = Callable[[int, int, int, int], bool]


class CaseTag(str, enum.Enum):
    L1_EVEN_QUOTIENT = "L1-even-quotient"
    L1_ODD_QUOTIENT = "L1-odd-quotient"
    C1_EVEN = "C1-even"
    C1_ODD_SIMPLE = "C1-odd-simple"
    C1_ODD_QUOTIENT = "C1-odd-quotient"
    C2_EVEN = "C2-even"
    C2_ODD = "C2-odd"
    C3_EVEN = "C3-even"
    C4_ODD = "C4-odd"


# Tags whose block count of (j-1) is the odd number 2*k1 + 1.
_ODD_BLOCK = {CaseTag.L1_ODD_QUOTIENT, CaseTag.C1_ODD_QUOTIENT}
# Tags that add a single extra neighbour on top of 2*k1*(j-1) + 2*k2.
_PLUS_ONE = {CaseTag.C1_ODD_SIMPLE, CaseTag.C2_ODD, CaseTag.C4_ODD}


@dataclass(frozen=True)
class Decomposition:
    """An expression of ``d`` selecting one construction.

    ``rem`` is what is left of ``d`` after the ``(2*k1)`` or ``(2*k1 + 1)``
    blocks of ``j - 1``; ``w_quot`` is floor(``(j - 1 + rem) / 4``) for the
    two odd-block forms and ``None`` otherwise.
    """

    case_tag: CaseTag
    k1: int
    k2: int
    rem: int
    w_quot: int | None = None

    def blocks(self) -> int:
        return 2 * self.k1 + (1 if self.case_tag in _ODD_BLOCK else 0)

    def degree(self, j: int) -> int:
        """Reconstruct ``d`` from the tagged formula."""
        if self.case_tag is CaseTag.C1_ODD_QUOTIENT:
            tail = self.rem
        else:
            tail = 2 * self.k2 + (1 if self.case_tag in _PLUS_ONE else 0)
        return self.blocks() * (j - 1) + tail

    def to_dict(self) -> dict:
        out = asdict(self)
        out["case_tag"] = self.case_tag.value
        return out


def _parity_case(j: int, s: int, d: int) -> str:
    if j % 2 and s % 2:
        return "L1"
    if j % 2 == 0 and s % 2:
        return "C1"
    if j % 2 == 0:
        return "C2"
    return "C3" if d % 2 == 0 else "C4"


def _check_request(j: int, s: int, d: int) -> None:
    if j < 3 or s < 1:
        raise PreconditionError(f"need j >= 3 and s >= 1, got j={j}, s={s}")
    if d < 0:
        raise PreconditionError(f"degree must be >= 0, got {d}")
    if d > (j - 1) * s:
        raise DegreeTooLarge(j, s, d)
    if (j * s * d) % 2:
        raise ParityInfeasible(j, s, d)


def window_violation(dec: Decomposition, j: int, s: int) -> str | None:
    """Describe the first violated window constraint of ``dec``, or ``None``."""
    k1, k2, rem, t = dec.k1, dec.k2, dec.rem, dec.case_tag
    checks: list[tuple[bool, str]]
    if t is CaseTag.L1_EVEN_QUOTIENT:
        checks = [(2 * k1 <= s - 1, "2k1 <= s-1"), (0 < 2 * k2 <= j - 1, "0 < 2k2 <= j-1")]
    elif t is CaseTag.L1_ODD_QUOTIENT:
        checks = [(2 * k1 <= s - 3, "2k1 <= s-3"), (0 < 2 * k2 <= j - 1, "0 < 2k2 <= j-1")]
    elif t is CaseTag.C1_EVEN:
        checks = [(2 * k1 <= s - 1, "2k1 <= s-1"), (0 < 2 * k2 <= j - 2, "0 < 2k2 <= j-2")]
    elif t is CaseTag.C1_ODD_SIMPLE:
        checks = [(2 * k1 <= s - 1, "2k1 <= s-1"), (0 <= 2 * k2 <= j - 2, "2k2 <= j-2")]
    elif t is CaseTag.C1_ODD_QUOTIENT:
        checks = [(2 * k1 <= s - 3, "2k1 <= s-3"), (0 < rem <= j - 1, "0 < m <= j-1")]
    elif t in (CaseTag.C2_EVEN, CaseTag.C3_EVEN):
        checks = [(2 * k1 <= s - 2, "2k1 <= s-2"), (0 < k2 <= j - 1, "0 < k2 <= j-1")]
    else:  # C2_ODD, C4_ODD
        checks = [(2 * k1 <= s - 2, "2k1 <= s-2"), (0 <= k2 < j - 1, "0 <= k2 < j-1")]
    if t.value[:2] != _parity_case(j, s, dec.degree(j)):
        return f"tag {t.value} does not match the parities of (j={j}, s={s})"
    for ok, text in checks:
        if not ok:
            return text
    return None


def decompose(j: int, s: int, d: int) -> Decomposition:
    """Canonical decomposition of ``d`` for ``K_{j x s}``.

    Writes ``d = 2*q*(j-1) + R`` with ``0 <= R < 2*(j-1)``; the remainder
    ``R`` picks the form and is kept as large as the form allows. When
    ``R == 0`` one block of ``j - 1`` is borrowed so that the strictly
    positive remainder the forms require is available.

    Raises
    ------
    DegreeTooLarge, ParityInfeasible
        If no ``d``-regular spanning subgraph can exist.
    NoDecomposition
        If ``d == 0`` (no rule applies) or the resulting coefficients break
        the form's window constraints.

    Examples
    --------
    >>> decompose(3, 5, 6)
    Decomposition(case_tag=<CaseTag.L1_EVEN_QUOTIENT: 'L1-even-quotient'>, k1=1, k2=1, rem=2, w_quot=None)
    """
    _check_request(j, s, d)
    if d == 0:
        raise NoDecomposition(j, s, d, "d = 0 is the empty graph; no rule applies")
    q, R = divmod(d, 2 * (j - 1))
    case = _parity_case(j, s, d)
    h = j - 1
    if case == "L1":
        if 0 < R <= h:
            dec = Decomposition(CaseTag.L1_EVEN_QUOTIENT, q, R // 2, R)
        else:
            k1, k2 = (q, (R - h) // 2) if R > h else (q - 1, h // 2)
            dec = Decomposition(CaseTag.L1_ODD_QUOTIENT, k1, k2, 2 * k2, (h + 2 * k2) // 4)
    elif case == "C1":
        if R == 0 or R > h:
            k1, m = (q - 1, h) if R == 0 else (q, R - h)
            dec = Decomposition(CaseTag.C1_ODD_QUOTIENT, k1, m // 2, m, (h + m) // 4)
        elif R % 2 == 0:
            dec = Decomposition(CaseTag.C1_EVEN, q, R // 2, R)
        else:
            dec = Decomposition(CaseTag.C1_ODD_SIMPLE, q, (R - 1) // 2, R)
    else:
        if R == 0:
            k1, k2 = q - 1, h
            tag = CaseTag.C2_EVEN if case == "C2" else CaseTag.C3_EVEN
        elif R % 2 == 0:
            k1, k2 = q, R // 2
            tag = CaseTag.C2_EVEN if case == "C2" else CaseTag.C3_EVEN
        else:
            k1, k2 = q, (R - 1) // 2
            tag = CaseTag.C2_ODD if case == "C2" else CaseTag.C4_ODD
        dec = Decomposition(tag, k1, k2, d - 2 * k1 * h)
    problem = window_violation(dec, j, s)
    if problem is not None or dec.degree(j) != d:
        raise NoDecomposition(j, s, d, problem or "coefficients do not reconstruct d")
    return dec


def _in_ball(x: int, k: int, w: int, c: int) -> bool:
    return k > 0 and x in ball(k, w, c)


def _in_sigma(x: int, c: int, w: int, y: int) -> bool:
    return x in sigma(c, w, y)


def rule_parts(dec: Decomposition, shape: Shape) -> list[tuple[str, Predicate]]:
    """The labelled rule parts of ``dec`` as predicates ``(i, l, p, r) -> bool``.

    Only the parts whose guard (the conditions on ``k2`` or on ``w``) holds
    for this decomposition are returned.
    """
    j, s = shape.j, shape.s
    k1, k2, t = dec.k1, dec.k2, dec.case_tag

    def part_a(i, l, p, r):
        return p != i and _in_ball(r, k1, s, l)

    def same_slot_ball(radius):
        return lambda i, l, p, r: r == l and _in_ball(p, radius, j, i)

    parts: list[tuple[str, Predicate]] = [("a", part_a)]

    if t in (CaseTag.L1_EVEN_QUOTIENT, CaseTag.C1_EVEN):
        parts.append(("b", same_slot_ball(k2)))

    elif t is CaseTag.L1_ODD_QUOTIENT:
        total = j - 1 + 2 * k2
        w = total // 4
        if total % 4 == 0:
            parts.append(
                ("b", lambda i, l, p, r: _in_sigma(r, k1 + 1, s, l) and _in_ball(p, w, j, i))
            )
        else:
            parts.append(
                (
                    "c",
                    lambda i, l, p, r: (_in_sigma(r, k1 + 1, s, l) and _in_ball(p, w, j, i))
                    or (r == l and _in_ball(p, 1, j, i)),
                )
            )

    elif t is CaseTag.C1_ODD_SIMPLE:
        parts.append(("b", same_slot_ball(k2)))
        parts.append(("c", lambda i, l, p, r: r == l and _in_sigma(p, j // 2, j, i)))

    elif t is CaseTag.C1_ODD_QUOTIENT:
        total = j - 1 + dec.rem
        w = total // 4
        parts.append(
            ("b", lambda i, l, p, r: _in_sigma(r, k1 + 1, s, l) and _in_ball(p, w, j, i))
        )
        extra = total - 4 * w
        if extra == 1:
            parts.append(("c", lambda i, l, p, r: r == l and _in_sigma(p, j // 2, j, i)))
        elif extra == 2:
            parts.append(("d", lambda i, l, p, r: r == l and _in_sigma(p, 1, j, i)))
        elif extra == 3:
            # union of the two distance classes: three extra neighbours
            parts.append(
                (
                    "e",
                    lambda i, l, p, r: r == l
                    and (_in_sigma(p, 1, j, i) or _in_sigma(p, j // 2, j, i)),
                )
            )

    elif t is CaseTag.C2_EVEN:
        half = s // 2
        if k2 < j // 2:
            parts.append(("b", same_slot_ball(k2)))
        elif k2 < j - 1:
            rad = (2 * k2 - (j - 2)) // 2
            parts.append(
                (
                    "c",
                    lambda i, l, p, r: (r == l and _in_ball(p, (j - 2) // 2, j, i))
                    or (_in_sigma(r, half, s, l) and _in_ball(p, rad, j, i)),
                )
            )
        else:
            parts.append(
                ("d", lambda i, l, p, r: p != i and (r == l or _in_sigma(r, half, s, l)))
            )

    elif t is CaseTag.C2_ODD:
        half = s // 2
        if k2 <= (j - 2) // 2:
            parts.append(
                (
                    "b",
                    lambda i, l, p, r: r == l
                    and (_in_ball(p, k2, j, i) or _in_sigma(p, j // 2, j, i)),
                )
            )
        else:
            rad = (2 * k2 - (j - 2)) // 2
            parts.append(
                (
                    "c",
                    lambda i, l, p, r: (r == l and p != i)
                    or (_in_sigma(r, half, s, l) and _in_ball(p, rad, j, i)),
                )
            )

    elif t is CaseTag.C3_EVEN:
        half = s // 2
        if 2 * k2 < j:
            parts.append(("b", same_slot_ball(k2)))
        else:
            rad = (2 * k2 - (j - 1)) // 2
            parts.append(
                (
                    "c",
                    lambda i, l, p, r: (r == l and p != i)
                    or (_in_sigma(r, half, s, l) and _in_ball(p, rad, j, i)),
                )
            )

    elif t is CaseTag.C4_ODD:
        half = s // 2
        mid = (j - 1) // 2

        def directional(c):
            # forward part shift when moving to a higher slot, backward when lower
            def pred(i, l, p, r):
                if not _in_sigma(r, half, s, l):
                    return False
                if r > l:
                    return p == sigma_plus(c, j, i)
                return p == sigma_minus(c, j, i)

            return pred

        if k2 < mid:
            step = directional(k2 + 1)
            parts.append(
                ("b", lambda i, l, p, r: (r == l and _in_ball(p, k2, j, i)) or step(i, l, p, r))
            )
        elif k2 == mid:
            step = directional(k2 + 1)
            parts.append(("c", lambda i, l, p, r: (r == l and p != i) or step(i, l, p, r)))
        else:
            rad = (2 * k2 - (j - 1)) // 2
            step = directional(rad + 1)
            parts.append(
                (
                    "d",
                    lambda i, l, p, r: (r == l and p != i)
                    or (_in_sigma(r, half, s, l) and _in_ball(p, rad, j, i))
                    or step(i, l, p, r),
                )
            )
    return parts


def _pair_args(shape: Shape, u: Vertex | tuple[int, int], v: Vertex | tuple[int, int]):
    shape.flat(u)
    shape.flat(v)
    if tuple(u) == tuple(v):
        raise PreconditionError("adjacency is defined for distinct vertices only")
    return (u[0], u[1], v[0], v[1])


def matching_parts(dec: Decomposition, shape: Shape, u, v) -> list[str]:
    """Labels of every rule part that holds for the pair ``(u, v)``."""
    i, l, p, r = _pair_args(shape, u, v)
    if i == p:
        return []
    return [label for label, pred in rule_parts(dec, shape) if pred(i, l, p, r)]


def adjacency_rule(dec: Decomposition, shape: Shape, u, v) -> bool:
    """Whether the construction for ``dec`` joins ``u`` and ``v``."""
    i, l, p, r = _pair_args(shape, u, v)
    if i == p:
        return False
    return any(pred(i, l, p, r) for _, pred in rule_parts(dec, shape))


@dataclass
class ConstructionReport:
    requested_d: int
    histogram: dict[int, int]
    valid: bool
    rule_trace: list[tuple[str, int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "requested_d": self.requested_d,
            "histogram": {str(k): v for k, v in self.histogram.items()},
            "valid": self.valid,
            "rule_trace": [list(x) for x in self.rule_trace],
        }


def _assemble(dec: Decomposition, shape: Shape) -> tuple[MpGraph, list[tuple[str, int]]]:
    parts = rule_parts(dec, shape)
    counts = {label: 0 for label, _ in parts}
    edges = []
    s = shape.s
    for a, b in shape.edges():
        i, l = divmod(a, s)
        p, r = divmod(b, s)
        for label, pred in parts:
            if pred(i, l, p, r):
                counts[label] += 1
                edges.append((a, b))
                break
    return MpGraph(shape, frozenset(edges)), list(counts.items())


def construct(j: int, s: int, d: int, *, near: bool = False) -> tuple[MpGraph, ConstructionReport]:
    """Build the construction for ``(j, s, d)`` together with its report.

    With ``near=True`` a parity-blocked ``d`` falls back to ``d - 1`` and the
    report accepts a histogram concentrated on ``d - 1``.
    """
    shape = Shape(j, s)
    target = d
    if near:
        if j < 3 or d < 1:
            raise PreconditionError(f"near-regular request needs j >= 3 and d >= 1, got {j}, {d}")
        if d > (j - 1) * s:
            raise DegreeTooLarge(j, s, d)
        if (j * s * d) % 2:
            target = d - 1
    _check_request(j, s, target)
    if target == 0:
        g, trace = empty_graph(shape), []
    else:
        g, trace = _assemble(decompose(j, s, target), shape)
    hist = degrees(g)
    report = ConstructionReport(d, hist, list(hist) == [target], trace)
    if not report.valid:
        raise ConstructionInvalid(report)
    return g, report


def regular_subgraph(j: int, s: int, d: int) -> MpGraph:
    """A spanning ``d``-regular subgraph of ``K_{j x s}``.

    >>> len(regular_subgraph(3, 5, 6))
    45
    """
    return construct(j, s, d)[0]


def near_regular_subgraph(j: int, s: int, d: int) -> MpGraph:
    """``regular_subgraph(j, s, d)``, or the ``d - 1`` construction when
    ``j*s*d`` is odd. The maximum degree never exceeds ``d``."""
    return construct(j, s, d, near=True)[0]


@dataclass(frozen=True)
class SweepEntry:
    j: int
    s: int
    d: int
    status: str
    case_tag: str | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def coverage_sweep(js: Iterable[int], ss: Iterable[int]) -> list[SweepEntry]:
    """Run every parity-feasible construction over the given shapes.

    Failures are recorded as entries with status ``NoDecomposition`` or
    ``ConstructionInvalid`` rather than raised.
    """
    ss = list(ss)
    out = []
    for j in js:
        for s in ss:
            for d in range((j - 1) * s + 1):
                if (j * s * d) % 2:
                    continue
                tag = None
                try:
                    if d:
                        tag = decompose(j, s, d).case_tag.value
                    construct(j, s, d)
                except NoDecomposition as exc:
                    out.append(SweepEntry(j, s, d, "NoDecomposition", tag, exc.reason))
                except ConstructionInvalid as exc:
                    out.append(
                        SweepEntry(j, s, d, "ConstructionInvalid", tag, str(exc.report.to_dict()))
                    )
                else:
                    out.append(SweepEntry(j, s, d, "ok", tag))
    return out
