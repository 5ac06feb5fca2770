"""Cyclic neighbourhoods on ``Z_w``.

``sigma(c, w, i)`` is the pair of indices at cyclic distance exactly ``c``
from ``i``; ``ball(k, w, i)`` is the union of ``sigma`` over ``c = 1..k``.
All functions return indices in ascending order.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import PreconditionError

__all__ = ["sigma", "sigma_plus", "sigma_minus", "ball"]


def _check(w: int, i: int) -> None:
    if w < 2:
        raise PreconditionError(f"modulus must be >= 2, got {w}")
    if not 0 <= i < w:
        raise PreconditionError(f"index {i} outside [0, {w - 1}]")


def _check_offset(c: int, w: int, i: int) -> None:
    _check(w, i)
    if not 0 < c <= w - 1:
        raise PreconditionError(f"offset {c} outside [1, {w - 1}]")


def sigma_plus(c: int, w: int, i: int) -> int:
    """Forward neighbour ``i + c`` wrapped into ``[0, w-1]``."""
    _check_offset(c, w, i)
    a = i + c
    return a - w if a > w - 1 else a


def sigma_minus(c: int, w: int, i: int) -> int:
    """Backward neighbour ``i - c`` wrapped into ``[0, w-1]``."""
    _check_offset(c, w, i)
    a = i - c
    return a + w if a < 0 else a


@lru_cache(maxsize=None)
def sigma(c: int, w: int, i: int) -> tuple[int, ...]:
    """Indices at cyclic distance exactly ``c`` from ``i``.

    A single index is returned when ``2c == w``.

    >>> sigma(1, 5, 0)
    (1, 4)
    >>> sigma(2, 4, 0)
    (2,)
    """
    return tuple(sorted({sigma_plus(c, w, i), sigma_minus(c, w, i)}))


@lru_cache(maxsize=None)
def ball(k: int, w: int, i: int) -> tuple[int, ...]:
    """Indices at cyclic distance ``1..k`` from ``i`` (empty for ``k == 0``).

    >>> ball(2, 7, 6)
    (0, 1, 4, 5)
    """
    _check(w, i)
    if not 0 <= k <= w - 1:
        raise PreconditionError(f"radius {k} outside [0, {w - 1}]")
    out: set[int] = set()
    for c in range(1, k + 1):
        out.update(sigma(c, w, i))
    return tuple(sorted(out))
