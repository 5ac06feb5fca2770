"""Exact decision procedure for ``K_{j x s} -> (S_n, S_m)``.

A coloring avoids a red ``S_n`` and a blue ``S_m`` iff every vertex has red
degree in ``[D - (m - 2), n - 2]``, where ``D = (j-1)*s`` is the host
degree. So the question is whether ``K_{j x s}`` has a spanning subgraph
with all degrees in that window:

* if the window is empty (``D > n + m - 4``) the host arrows outright;
* otherwise a depth-first search assigns the edges in canonical order,
  blue before red, pruning any vertex that can no longer land in the window.

Because the pruning is sound and blue is tried first, the first coloring
found has the lexicographically least red-indicator vector (edge 0 is the
most significant position). This holds however the search is split across
workers. :func:`arrows_bruteforce` enumerates colorings in the same order,
so both procedures return the same certificate.
"""

from __future__ import annotations

import enum
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExhausted, NotFound, PreconditionError, TooLarge
from .graph import Shape, TwoColoring

__all__ = [
    "Method",
    "OracleResult",
    "DEFAULT_BUDGET",
    "BRUTE_FORCE_CAP",
    "degree_window",
    "arrows_oracle",
    "arrows_bruteforce",
    "min_arrowing_s",
]

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8
BRUTE_FORCE_CAP = 25
_CHUNK = 1 << 16


class Method(str, enum.Enum):
    PIGEONHOLE = "Pigeonhole"
    PRUNED_SEARCH = "PrunedSearch"
    BRUTE_FORCE = "BruteForce"


@dataclass(frozen=True)
class OracleResult:
    arrows: bool
    certificate: TwoColoring | None
    nodes_explored: int
    method: Method

    def to_dict(self) -> dict:
        cert = None
        if self.certificate is not None:
            shape = self.certificate.shape
            cert = {
                "j": shape.j,
                "s": shape.s,
                "red": [list(e) for e, b in zip(shape.edges(), self.certificate.red_indicator) if b],
            }
        return {
            "arrows": self.arrows,
            "method": self.method.value,
            "nodes_explored": self.nodes_explored,
            "certificate": cert,
        }


def _check_args(j: int, s: int, n: int, m: int) -> Shape:
    if j < 3 or s < 1 or n < 2 or m < 2:
        raise PreconditionError(f"need j >= 3, s >= 1, n, m >= 2; got {j}, {s}, {n}, {m}")
    return Shape(j, s)


def degree_window(j: int, s: int, n: int, m: int) -> tuple[int, int]:
    """Admissible red degrees ``(lo, hi)`` of a good coloring; empty if ``lo > hi``."""
    host = (j - 1) * s
    return max(0, host - (m - 2)), min(n - 2, host)


def _search(j: int, s: int, lo: int, hi: int, prefix: tuple[int, ...], budget: int):
    """DFS below a fixed assignment of the first ``len(prefix)`` edges.

    Returns ``(indicator or None, nodes)``; raises BudgetExhausted.
    """
    edges = Shape(j, s).edges()
    E = len(edges)
    host = (j - 1) * s
    red = [0] * (j * s)
    rem = [host] * (j * s)
    ea = [e[0] for e in edges]
    eb = [e[1] for e in edges]
    choice = [-1] * E
    nodes = 0

    for k, c in enumerate(prefix):
        a, b = ea[k], eb[k]
        if c:
            if red[a] >= hi or red[b] >= hi:
                return None, nodes
            red[a] += 1
            red[b] += 1
        elif red[a] + rem[a] <= lo or red[b] + rem[b] <= lo:
            return None, nodes
        rem[a] -= 1
        rem[b] -= 1
        choice[k] = c
        nodes += 1

    start = len(prefix)
    k = start
    while True:
        if k == E:
            return tuple(choice), nodes
        a, b = ea[k], eb[k]
        c = choice[k] + 1
        if c == 0 and (red[a] + rem[a] <= lo or red[b] + rem[b] <= lo):
            c = 1
        if c == 1 and (red[a] >= hi or red[b] >= hi):
            c = 2
        if c <= 1:
            nodes += 1
            if nodes > budget:
                raise BudgetExhausted(budget)
            rem[a] -= 1
            rem[b] -= 1
            if c:
                red[a] += 1
                red[b] += 1
            choice[k] = c
            k += 1
            continue
        # both options exhausted: backtrack
        choice[k] = -1
        k -= 1
        if k < start:
            return None, nodes
        a, b = ea[k], eb[k]
        rem[a] += 1
        rem[b] += 1
        if choice[k]:
            red[a] -= 1
            red[b] -= 1


def _search_task(args):
    return _search(*args)


def arrows_oracle(
    j: int,
    s: int,
    n: int,
    m: int,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    parity_prune: bool = True,
) -> OracleResult:
    """Decide whether every red/blue coloring of ``K_{j x s}`` has a red
    ``S_n`` or a blue ``S_m``.

    Parameters
    ----------
    budget
        Maximum number of search nodes (per worker when ``jobs > 1``).
    jobs
        Number of worker processes; the result does not depend on it.
    parity_prune
        Refute at the root when every degree is forced to the same value
        and the degree sum would be odd. Disabling it leaves the answer
        unchanged and only costs search time.

    Raises
    ------
    BudgetExhausted
        If the search does not finish within ``budget`` nodes.
    """
    shape = _check_args(j, s, n, m)
    lo, hi = degree_window(j, s, n, m)
    if lo > hi:
        return OracleResult(True, None, 0, Method.PIGEONHOLE)
    # every degree forced to lo == hi with an odd degree sum: no subgraph
    if parity_prune and lo == hi and (shape.order * lo) % 2:
        return OracleResult(True, None, 1, Method.PRUNED_SEARCH)

    if jobs <= 1:
        found, nodes = _search(j, s, lo, hi, (), budget)
    else:
        depth = min(shape.size, max(1, (4 * jobs - 1).bit_length()))
        prefixes = list(itertools.product((0, 1), repeat=depth))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search_task, [(j, s, lo, hi, p, budget) for p in prefixes]))
        nodes = sum(x[1] for x in results)
        # prefixes are in lexicographic order, so the first hit is the least certificate
        found = next((x[0] for x in results if x[0] is not None), None)
    log.debug("oracle j=%d s=%d n=%d m=%d window=[%d,%d] nodes=%d", j, s, n, m, lo, hi, nodes)
    if found is None:
        return OracleResult(True, None, nodes, Method.PRUNED_SEARCH)
    return OracleResult(False, TwoColoring.from_mask(shape, found), nodes, Method.PRUNED_SEARCH)


def arrows_bruteforce(j: int, s: int, n: int, m: int) -> OracleResult:
    """Decide arrowing by enumerating all ``2**|E|`` colorings.

    Colorings are visited as integers whose most significant bit is edge 0,
    so the first good one found is the lexicographically least.

    Raises
    ------
    TooLarge
        If ``K_{j x s}`` has more than 25 edges.
    """
    shape = _check_args(j, s, n, m)
    E = shape.size
    if E > BRUTE_FORCE_CAP:
        raise TooLarge(f"K_{{{j}x{s}}} has {E} edges; brute force is capped at {BRUTE_FORCE_CAP}")
    inc = np.zeros((E, shape.order), dtype=np.int32)
    for k, (a, b) in enumerate(shape.edges()):
        inc[k, a] = inc[k, b] = 1
    host = shape.host_degree
    shifts = np.arange(E - 1, -1, -1, dtype=np.int64)
    total = 1 << E
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        bits = ((masks[:, None] >> shifts) & 1).astype(np.int32)
        red = bits @ inc
        good = (red.max(axis=1) <= n - 2) & ((host - red).max(axis=1) <= m - 2)
        if good.any():
            hit = int(np.argmax(good))
            cert = TwoColoring.from_mask(shape, bits[hit].tolist())
            return OracleResult(False, cert, start + hit + 1, Method.BRUTE_FORCE)
    return OracleResult(True, None, total, Method.BRUTE_FORCE)


def min_arrowing_s(
    j: int, n: int, m: int, s_max: int, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> int:
    """Smallest ``s <= s_max`` with ``K_{j x s} -> (S_n, S_m)``.

    Scans upward and stops at the first arrowing ``s``: a good coloring of
    ``K_{j x (s+1)}`` restricts to one of ``K_{j x s}``, so arrowing is
    monotone in ``s``.
    """
    if s_max < 1:
        raise PreconditionError("s_max must be >= 1")
    for s in range(1, s_max + 1):
        if arrows_oracle(j, s, n, m, budget=budget, jobs=jobs).arrows:
            return s
    raise NotFound(f"K_{{{j}xs}} does not arrow (S_{n}, S_{m}) for any s <= {s_max}")
