"""Independent brute-force oracles for the test suite.

Everything here works from raw adjacency lists with Floyd-Warshall
distances and explicit pair enumeration, deliberately sharing no code
with the library's BFS / edge-iteration paths.
"""
from __future__ import annotations

from itertools import combinations


def fw_distances(adjacency) -> list[list[int]]:
    """All-pairs distances by Floyd-Warshall; n marks 'unreachable'."""
    n = len(adjacency)
    inf = n  # any finite distance is at most n - 1
    dist = [[inf] * n for _ in range(n)]
    for u in range(n):
        dist[u][u] = 0
        for v in adjacency[u]:
            dist[u][v] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def oracle_profile(adjacency) -> tuple[list[int], int, int]:
    """(sigma, wiener, diameter); raises if disconnected."""
    n = len(adjacency)
    dist = fw_distances(adjacency)
    if any(dist[u][v] >= n for u in range(n) for v in range(n)):
        raise ValueError("disconnected")
    sigma = [sum(row) for row in dist]
    total = sum(sigma)
    assert total % 2 == 0
    diameter = max(max(row) for row in dist) if n > 1 else 0
    return sigma, total // 2, diameter


def oracle_indices(adjacency) -> dict[str, int]:
    """All eight indices plus the Wiener index by pair enumeration."""
    n = len(adjacency)
    sigma, wiener, diameter = oracle_profile(adjacency)
    deg = [len(adjacency[u]) for u in range(n)]
    nbrs = [set(adjacency[u]) for u in range(n)]
    out = {
        "s1": 0, "s2": 0, "s1_co": 0, "s2_co": 0,
        "m1": 0, "m2": 0, "m1_co": 0, "m2_co": 0,
        "wiener": wiener, "diameter": diameter,
    }
    for u, v in combinations(range(n), 2):
        if v in nbrs[u]:
            out["s1"] += sigma[u] + sigma[v]
            out["s2"] += sigma[u] * sigma[v]
            out["m1"] += deg[u] + deg[v]
            out["m2"] += deg[u] * deg[v]
        else:
            out["s1_co"] += sigma[u] + sigma[v]
            out["s2_co"] += sigma[u] * sigma[v]
            out["m1_co"] += deg[u] + deg[v]
            out["m2_co"] += deg[u] * deg[v]
    return out
