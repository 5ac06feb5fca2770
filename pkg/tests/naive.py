"""Reference oracles that share no code with the package's search paths.

Vertices are ``(part, slot)`` pairs and everything is enumerated directly,
so these are only usable on tiny hosts.
"""

from itertools import combinations, product


def host_edges(j, s):
    verts = [(i, l) for i in range(j) for l in range(s)]
    return [(u, v) for u, v in combinations(verts, 2) if u[0] != v[0]]


def red_degrees(j, s, red_edges):
    deg = {(i, l): 0 for i in range(j) for l in range(s)}
    for u, v in red_edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def is_good(j, s, n, m, red_edges):
    host = (j - 1) * s
    return all(d <= n - 2 and host - d <= m - 2 for d in red_degrees(j, s, red_edges).values())


def arrows(j, s, n, m):
    """True iff every red/blue coloring of K_{j x s} has a red S_n or blue S_m."""
    edges = host_edges(j, s)
    for bits in product((0, 1), repeat=len(edges)):
        if is_good(j, s, n, m, [e for e, b in zip(edges, bits) if b]):
            return False
    return True


def min_arrowing(j, n, m, s_max):
    for s in range(1, s_max + 1):
        if arrows(j, s, n, m):
            return s
    return None
