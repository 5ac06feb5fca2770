"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations

from typing import Any


class SizeRamseyError(Exception):
    """Base class for all errors raised by :mod:`sizeramsey`."""


class PreconditionError(SizeRamseyError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class ParseError(SizeRamseyError, ValueError):
    """A text serialization could not be read back."""


# regular-factory


class DegreeTooLarge(PreconditionError):
    def __init__(self, j: int, s: int, d: int) -> None:
        super().__init__(f"degree {d} exceeds (j-1)*s = {(j - 1) * s} for K_{{{j}x{s}}}")
        self.j, self.s, self.d = j, s, d


class ParityInfeasible(PreconditionError):
    def __init__(self, j: int, s: int, d: int) -> None:
        super().__init__(
            f"j*s*d = {j * s * d} is odd; no {d}-regular spanning subgraph of K_{{{j}x{s}}}"
        )
        self.j, self.s, self.d = j, s, d


class NoDecomposition(SizeRamseyError):
    """No decomposition of ``d`` satisfies the window constraints of its case."""

    def __init__(self, j: int, s: int, d: int, reason: str) -> None:
        super().__init__(f"no decomposition for (j={j}, s={s}, d={d}): {reason}")
        self.j, self.s, self.d = j, s, d
        self.reason = reason


class ConstructionInvalid(SizeRamseyError):
    """The adjacency rules produced a graph that is not d-regular."""

    def __init__(self, report: Any) -> None:
        super().__init__(
            f"construction for d={report.requested_d} is not regular: "
            f"histogram {report.histogram}"
        )
        self.report = report


# ramsey-calc


class ThresholdExceeded(PreconditionError):
    def __init__(self, j: int, s: int, n: int, m: int, value: int) -> None:
        super().__init__(
            f"s={s} is not below m_{j}(S_{n}, S_{m}) = {value}; no good coloring exists"
        )
        self.value = value


class NotAWitness(SizeRamseyError):
    """A generated coloring failed verification."""

    def __init__(self, vertex: Any, color: str, degree: int) -> None:
        super().__init__(f"vertex {vertex} has {color} degree {degree}")
        self.vertex, self.color, self.degree = vertex, color, degree


# arrowing-oracle


class BudgetExhausted(SizeRamseyError):
    def __init__(self, budget: int) -> None:
        super().__init__(f"search exceeded the node budget of {budget}")
        self.budget = budget


class TooLarge(PreconditionError):
    pass


class NotFound(SizeRamseyError):
    pass
