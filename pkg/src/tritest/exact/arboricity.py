"""Degeneracy, core numbers and exact arboricity for small graphs."""
import math

import numpy as np

from tritest.errors import ScaleError
from tritest.graph.core import Graph

# subset enumeration over 2^n vertex sets
EXACT_ARBORICITY_MAX_N = 16


def core_numbers(graph: Graph) -> np.ndarray:
    """
    Core number of every vertex by bucketed min-degree removal.

    Vertices sit in an array sorted by current degree with bucket starts in
    `bins`; removing the front vertex moves each higher-degree neighbour one
    bucket down by swapping it with the first vertex of its bucket.
    """
    n = graph.n
    deg = graph.degrees().tolist()
    adj = graph.adjacency()
    max_deg = max(deg, default=0)

    bins = [0] * (max_deg + 1)
    for d in deg:
        bins[d] += 1
    start = 0
    for d in range(max_deg + 1):
        bins[d], start = start, start + bins[d]

    pos = [0] * n
    vert = [0] * n
    for v in range(n):
        pos[v] = bins[deg[v]]
        vert[pos[v]] = v
        bins[deg[v]] += 1
    for d in range(max_deg, 0, -1):
        bins[d] = bins[d - 1]
    if bins:
        bins[0] = 0

    for i in range(n):
        v = vert[i]
        for u in adj[v]:
            if deg[u] > deg[v]:
                du, pu = deg[u], pos[u]
                pw = bins[du]
                w = vert[pw]
                if u != w:
                    pos[u], vert[pu] = pw, w
                    pos[w], vert[pw] = pu, u
                bins[du] += 1
                deg[u] -= 1
    return np.asarray(deg, dtype=np.int64)


def degeneracy(graph: Graph) -> int:
    """
    Largest core number; Γ(G) ≤ degeneracy(G) ≤ 2Γ(G) - 1 for any graph with an edge.

    Example:
        >>> degeneracy(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))
        3
    """
    if graph.n == 0:
        return 0
    return int(core_numbers(graph).max())


def density_bound(m: int, vertices: int) -> int:
    """⌈m/(vertices-1)⌉, the forest count a subgraph with these sizes needs (0 below 2 vertices)."""
    if vertices < 2 or m == 0:
        return 0
    return math.ceil(m / (vertices - 1))


def exact_arboricity_small(graph: Graph) -> int:
    """
    Arboricity as max over vertex subsets S of ⌈e(S)/(|S|-1)⌉.

    Raises:
        ScaleError: when n > EXACT_ARBORICITY_MAX_N
    """
    n = graph.n
    if n > EXACT_ARBORICITY_MAX_N:
        raise ScaleError(f"exact arboricity enumerates 2^n subsets and is limited to "
                         f"n ≤ {EXACT_ARBORICITY_MAX_N}, got n={n}; use degeneracy bounds instead")
    if graph.m == 0:
        return 0

    subsets = np.arange(1 << n, dtype=np.int64)
    sizes = np.zeros_like(subsets)
    for i in range(n):
        sizes += (subsets >> i) & 1
    counts = np.zeros_like(subsets)
    for u, v in graph.edges():
        counts += ((subsets >> u) & 1) & ((subsets >> v) & 1)

    ok = sizes >= 2
    # integer ceiling of counts / (sizes - 1)
    bounds = -(-counts[ok] // (sizes[ok] - 1))
    return int(bounds.max())
