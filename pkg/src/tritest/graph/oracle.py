"""
Query access to a graph in the general graph model.

Algorithms never touch a Graph directly: they hold a QueryOracle, which
answers degree, neighbour and pair queries and counts every answer in a
QueryLedger. A session (oracle + ledger + RNG) belongs to one run; run
many sessions to parallelise over one shared Graph.
"""
from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from tritest.errors import QueryContractError
from tritest.graph.core import Graph
from tritest.utils.random import make_rng


@dataclass
class QueryLedger:
    """Per-type query counts of one oracle session."""

    degree_queries: int = 0
    neighbor_queries: int = 0
    pair_queries: int = 0

    @property
    def total(self) -> int:
        return self.degree_queries + self.neighbor_queries + self.pair_queries

    def snapshot(self) -> 'QueryLedger':
        return QueryLedger(self.degree_queries, self.neighbor_queries, self.pair_queries)

    def as_dict(self) -> dict:
        return {
            'degree': self.degree_queries,
            'neighbor': self.neighbor_queries,
            'pair': self.pair_queries,
            'total': self.total,
        }

    def __add__(self, other: 'QueryLedger') -> 'QueryLedger':
        return QueryLedger(*(getattr(self, f.name) + getattr(other, f.name) for f in fields(self)))

    def __sub__(self, other: 'QueryLedger') -> 'QueryLedger':
        return QueryLedger(*(getattr(self, f.name) - getattr(other, f.name) for f in fields(self)))


class QueryOracle:
    """
    Oracle session over an immutable Graph.

    Args:
        graph: Ground-truth graph
        seed: Seed for the session's random generator; recorded on the session

    Example:
        >>> oracle = QueryOracle(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]), seed=7)
        >>> oracle.degree_query(0), oracle.neighbor_query(2, 1), oracle.pair_query(0, 1)
        (2, 0, True)
        >>> oracle.ledger.total
        3
    """

    def __init__(self, graph: Graph, seed: int | None = None):
        self._graph = graph
        self.ledger = QueryLedger()
        self.seed = seed
        self.rng = make_rng(seed)

    def reseed(self, seed: int | None) -> None:
        """Restart the session's random stream from a new seed."""
        self.seed = seed
        self.rng = make_rng(seed)

    @property
    def n(self) -> int:
        return self._graph.n

    @property
    def m(self) -> int:
        return self._graph.m

    @property
    def avg_degree(self) -> float:
        return self._graph.avg_degree

    @property
    def edge_density(self) -> float:
        return self._graph.edge_density

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._graph.n:
            raise QueryContractError(f"vertex {v} outside 0..{self._graph.n - 1}")

    def degree_query(self, v: int) -> int:
        """Return deg(v)."""
        self._check_vertex(v)
        self.ledger.degree_queries += 1
        return self._graph.degree(v)

    def neighbor_query(self, v: int, i: int) -> int:
        """Return the i-th smallest neighbour of v (1-based)."""
        self._check_vertex(v)
        deg = self._graph.degree(v)
        if not 1 <= i <= deg:
            raise QueryContractError(f"vertex {v} has degree {deg}, no neighbour #{i}")
        self.ledger.neighbor_queries += 1
        return int(self._graph.indices[self._graph.indptr[v] + i - 1])

    def has_jth_neighbor(self, v: int, j: int) -> int | None:
        """Return the j-th neighbour of v, or None when deg(v) < j."""
        return self.jth_neighbor(v, j)[1]

    def jth_neighbor(self, v: int, j: int, max_degree: int | None = None) -> tuple[int, int | None]:
        """
        One degree query on v, then the j-th neighbour when it exists.

        With max_degree set, a vertex of degree above it gets no neighbour
        query either. Returns (deg(v), neighbour or None).
        """
        if j < 1:
            raise QueryContractError(f"neighbour index must be at least 1, got {j}")
        deg = self.degree_query(v)
        if deg < j or (max_degree is not None and deg > max_degree):
            return deg, None
        return deg, self.neighbor_query(v, j)

    def pair_query(self, u: int, v: int) -> bool:
        """Return whether {u, v} is an edge."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise QueryContractError(f"pair query needs two distinct vertices, got {u} twice")
        self.ledger.pair_queries += 1
        return self._graph.has_edge(u, v)

    def degree_batch(self, vertices: np.ndarray) -> np.ndarray:
        """Answer one degree query per element of vertices."""
        vertices = np.asarray(vertices, dtype=np.int64)
        if vertices.size and (vertices.min() < 0 or vertices.max() >= self._graph.n):
            raise QueryContractError("degree batch contains an out-of-range vertex")
        self.ledger.degree_queries += int(vertices.size)
        indptr = self._graph.indptr
        return indptr[vertices + 1] - indptr[vertices]

    def neighbor_batch(self, vertices: np.ndarray, indices: np.ndarray) -> np.ndarray:
        """Answer one neighbour query per (vertex, 1-based index) pair."""
        vertices = np.asarray(vertices, dtype=np.int64)
        indices = np.asarray(indices, dtype=np.int64)
        if vertices.shape != indices.shape:
            raise QueryContractError("neighbour batch needs one index per vertex")
        if vertices.size:
            if vertices.min() < 0 or vertices.max() >= self._graph.n:
                raise QueryContractError("neighbour batch contains an out-of-range vertex")
            indptr = self._graph.indptr
            deg = indptr[vertices + 1] - indptr[vertices]
            if np.any(indices < 1) or np.any(indices > deg):
                raise QueryContractError("neighbour batch index past the vertex degree")
        self.ledger.neighbor_queries += int(vertices.size)
        return self._graph.indices[self._graph.indptr[vertices] + indices - 1]
