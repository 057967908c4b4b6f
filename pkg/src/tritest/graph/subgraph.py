"""
Heavy/light classification and the oriented subgraph D(G, t).

A vertex is HEAVY at threshold t when deg(v) > t and LIGHT otherwise.
H(G, t) drops every heavy-heavy edge; D(G, t) orients the rest from the
light endpoint to a heavy one, or from the smaller id between two light
endpoints. The oracle-side predicates cost a bounded number of degree
queries; build_h and friends take a full Graph and exist for reference
checks only.
"""
from __future__ import annotations

from enum import Enum
from typing import NamedTuple

import numpy as np

from tritest.graph.core import Graph
from tritest.graph.oracle import QueryOracle


class ThresholdClass(Enum):
    HEAVY = 'heavy'
    LIGHT = 'light'

    @classmethod
    def of(cls, degree: int, t: int) -> 'ThresholdClass':
        return cls.HEAVY if degree > t else cls.LIGHT


class OrientedEdge(NamedTuple):
    """An edge of D(G, t), pointing from source to target."""

    source: int
    target: int


def _check_threshold(t: int) -> None:
    if t < 1:
        raise ValueError(f"threshold must be at least 1, got {t}")


def orientation_is_out(v, deg_v, u, deg_u, t: int):
    """
    Whether the edge {v, u} leaves v in D(G, t), given both degrees.

    Works elementwise on numpy arrays. Heavy-heavy edges are never out-edges.
    """
    v_light = deg_v <= t
    u_heavy = deg_u > t
    return v_light & (u_heavy | (v < u))


def classify(oracle: QueryOracle, v: int, t: int) -> ThresholdClass:
    """Classify v as HEAVY or LIGHT at threshold t with one degree query."""
    _check_threshold(t)
    return ThresholdClass.of(oracle.degree_query(v), t)


def orient(oracle: QueryOracle, u: int, v: int, t: int) -> OrientedEdge | None:
    """
    Orient the edge {u, v} as in D(G, t).

    Args:
        oracle: Query session
        u, v: Endpoints of an edge of G
        t: Threshold

    Returns:
        OrientedEdge, or None when both endpoints are heavy (edge not in H(G, t))
    """
    _check_threshold(t)
    deg_u = oracle.degree_query(u)
    deg_v = oracle.degree_query(v)
    if deg_u > t and deg_v > t:
        return None
    if orientation_is_out(u, deg_u, v, deg_v, t):
        return OrientedEdge(u, v)
    return OrientedEdge(v, u)


def _kept_edges(graph: Graph, t: int) -> np.ndarray:
    edges = graph.edge_array()
    heavy = graph.degrees() > t
    return edges[~(heavy[edges[:, 0]] & heavy[edges[:, 1]])]


def build_h(graph: Graph, t: int) -> Graph:
    """Materialise H(G, t): G without its heavy-heavy edges, same vertex set."""
    _check_threshold(t)
    return Graph.from_edges(graph.n, _kept_edges(graph, t))


def edges_of_h(graph: Graph, t: int) -> int:
    """Exact m' = |E(H(G, t))|."""
    _check_threshold(t)
    return int(_kept_edges(graph, t).shape[0])


def out_degrees(graph: Graph, t: int) -> np.ndarray:
    """d_out of every vertex in D(G, t)."""
    _check_threshold(t)
    edges = _kept_edges(graph, t)
    deg = graph.degrees()
    a, b = edges[:, 0], edges[:, 1]
    a_out = orientation_is_out(a, deg[a], b, deg[b], t)
    sources = np.where(a_out, a, b)
    return np.bincount(sources, minlength=graph.n)
