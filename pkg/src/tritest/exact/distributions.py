"""Exact outcome enumeration for the estimator and the edge sampler."""
from fractions import Fraction

from tritest.errors import UndefinedDensityError
from tritest.graph.core import Graph


def estimator_expectation(graph: Graph, t: int) -> Fraction:
    """
    E[X] of the edge-count estimator, by enumerating every (vertex, neighbour) draw.

    One sample contributes n·deg(v)·Y; averaged over v uniform and u uniform
    in N(v) this is the out-degree sum of D(G, t), i.e. |E(H(G, t))|.
    """
    if t < 1:
        raise ValueError(f"threshold must be at least 1, got {t}")
    n = graph.n
    if n == 0:
        raise UndefinedDensityError("no vertices to sample")
    deg = graph.degrees()
    total = Fraction(0)
    for v in range(n):
        dv = int(deg[v])
        if dv == 0 or dv > t:
            continue
        for u in graph.neighbors(v).tolist():
            if deg[u] > t or v < u:
                # P(v) · P(u | v) · n·deg(v)
                total += Fraction(1, n) * Fraction(1, dv) * n * dv
    return total


def sampler_edge_distribution(graph: Graph, t: int, conditional: bool = False) -> dict[tuple[int, int], Fraction]:
    """
    Per-edge probability that one sampler attempt returns the edge.

    Enumerates all n·t equally likely (v, j) outcomes. With conditional=True
    the probabilities are normalised by the success probability, giving the
    distribution of the returned edge.

    Example:
        >>> dist = sampler_edge_distribution(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]), t=2)
        >>> sorted(dist.values())
        [Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)]
    """
    if t < 1:
        raise ValueError(f"threshold must be at least 1, got {t}")
    n = graph.n
    deg = graph.degrees()
    outcome = Fraction(1, n * t) if n else Fraction(0)
    dist: dict[tuple[int, int], Fraction] = {}
    for v in range(n):
        if deg[v] > t:
            continue
        # every j ≤ deg(v) ≤ t names an existing neighbour
        for u in graph.neighbors(v).tolist():
            edge = (min(u, v), max(u, v))
            dist[edge] = dist.get(edge, Fraction(0)) + outcome
    if conditional and dist:
        success = sum(dist.values())
        dist = {edge: p / success for edge, p in dist.items()}
    return dict(sorted(dist.items()))
