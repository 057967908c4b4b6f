"""Immutable undirected graphs stored as compressed sparse rows."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from tritest.errors import GraphFormatError


class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    Adjacency is stored in CSR form: the neighbours of v are
    ``indices[indptr[v]:indptr[v + 1]]``, strictly ascending, which fixes the
    answer to "the i-th neighbour of v". Both arrays are read-only so one Graph
    can back any number of concurrent oracle sessions.

    Example:
        >>> g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        >>> g.degree(0), g.neighbors(2).tolist()
        (2, [0, 1])
    """

    __slots__ = ('_indptr', '_indices')

    def __init__(self, indptr: np.ndarray, indices: np.ndarray):
        indptr = np.asarray(indptr, dtype=np.int64)
        indices = np.asarray(indices, dtype=np.int64)
        if indptr.ndim != 1 or indptr.size < 1 or indptr[0] != 0:
            raise ValueError("indptr must be a 1-d array starting at 0")
        if indptr[-1] != indices.size:
            raise ValueError("indptr[-1] must equal the number of adjacency entries")
        if indices.size % 2:
            raise ValueError("an undirected graph has an even number of adjacency entries")
        indptr.setflags(write=False)
        indices.setflags(write=False)
        self._indptr = indptr
        self._indices = indices

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] | np.ndarray) -> 'Graph':
        """
        Build a graph from an undirected edge list.

        Args:
            n: Number of vertices
            edges: Pairs (u, v) in any orientation

        Returns:
            Graph with ascending neighbour lists

        Raises:
            GraphFormatError: on an out-of-range id, a self-loop or a repeated edge
        """
        if n < 0:
            raise GraphFormatError(f"vertex count must be non-negative, got {n}")
        if not isinstance(edges, np.ndarray):
            edges = list(edges)
        arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)

        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise GraphFormatError(f"edge endpoint outside 0..{n - 1}")
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        if np.any(lo == hi):
            bad = int(lo[lo == hi][0])
            raise GraphFormatError(f"self-loop at vertex {bad}")
        keys = lo * max(n, 1) + hi
        if np.unique(keys).size != keys.size:
            raise GraphFormatError("repeated edge")

        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        counts = np.bincount(src, minlength=n)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        return cls(indptr, dst[order])

    @classmethod
    def empty(cls, n: int) -> 'Graph':
        """Graph with n isolated vertices."""
        return cls(np.zeros(n + 1, dtype=np.int64), np.zeros(0, dtype=np.int64))

    @property
    def n(self) -> int:
        return self._indptr.size - 1

    @property
    def m(self) -> int:
        return self._indices.size // 2

    @property
    def indptr(self) -> np.ndarray:
        return self._indptr

    @property
    def indices(self) -> np.ndarray:
        return self._indices

    @property
    def avg_degree(self) -> float:
        """d̄ = 2m/n, the average degree."""
        return 2 * self.m / self.n if self.n else 0.0

    @property
    def edge_density(self) -> float:
        """m/n, the edge density used for sample sizes."""
        return self.m / self.n if self.n else 0.0

    @property
    def max_degree(self) -> int:
        return int(self.degrees().max()) if self.n else 0

    def degree(self, v: int) -> int:
        return int(self._indptr[v + 1] - self._indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    def neighbors(self, v: int) -> np.ndarray:
        return self._indices[self._indptr[v]:self._indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = int(np.searchsorted(row, v))
        return i < row.size and int(row[i]) == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge once as (u, v) with u < v, in lexicographic order."""
        for u, v in self.edge_array().tolist():
            yield u, v

    def edge_array(self) -> np.ndarray:
        """(m, 2) array of edges with u < v, lexicographically sorted."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        keep = src < self._indices
        return np.column_stack([src[keep], self._indices[keep]])

    def adjacency(self) -> list[list[int]]:
        """Plain-list copy of the adjacency, for brute-force code."""
        return [row.tolist() for row in np.split(self._indices, self._indptr[1:-1])] if self.n else []

    def check_invariants(self) -> list[str]:
        """
        Check the structural invariants of a simple undirected graph.

        Returns:
            Human-readable problems; empty when the graph is valid
        """
        problems = []
        n = self.n
        if np.any(np.diff(self._indptr) < 0):
            problems.append("indptr is not monotone")
            return problems
        if self._indices.size and (self._indices.min() < 0 or self._indices.max() >= n):
            problems.append("neighbour id out of range")
            return problems
        src = np.repeat(np.arange(n, dtype=np.int64), self.degrees())
        if np.any(src == self._indices):
            problems.append("self-loop present")
        same_row = src[1:] == src[:-1]
        if np.any(self._indices[1:][same_row] <= self._indices[:-1][same_row]):
            problems.append("neighbour list not strictly ascending")
        forward = np.sort(src * max(n, 1) + self._indices)
        backward = np.sort(self._indices * max(n, 1) + src)
        if not np.array_equal(forward, backward):
            problems.append("adjacency is not symmetric")
        if int(self.degrees().sum()) != 2 * self.m:
            problems.append("degree sum differs from 2m")
        return problems

    def with_isolated(self, n: int) -> 'Graph':
        """Same edges on a vertex set padded with isolated vertices up to n."""
        if n < self.n:
            raise ValueError(f"cannot shrink a graph from {self.n} to {n} vertices")
        tail = np.full(n - self.n, self._indptr[-1], dtype=np.int64)
        return Graph(np.concatenate([self._indptr, tail]), self._indices.copy())

    def relabel(self, permutation: Sequence[int] | np.ndarray) -> 'Graph':
        """Graph with every vertex v renamed to permutation[v]."""
        perm = np.asarray(permutation, dtype=np.int64)
        if perm.size != self.n or not np.array_equal(np.sort(perm), np.arange(self.n)):
            raise ValueError("relabelling must be a permutation of 0..n-1")
        return Graph.from_edges(self.n, perm[self.edge_array()])

    @staticmethod
    def disjoint_union(*graphs: 'Graph') -> 'Graph':
        """Place graphs side by side; the k-th graph's ids are shifted past the earlier ones."""
        parts = []
        offset = 0
        for g in graphs:
            parts.append(g.edge_array() + offset)
            offset += g.n
        edges = np.concatenate(parts) if parts else np.zeros((0, 2), dtype=np.int64)
        return Graph.from_edges(offset, edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (np.array_equal(self._indptr, other._indptr)
                and np.array_equal(self._indices, other._indices))

    __hash__ = None

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GraphParams:
    """The parameters (n, m, ε) every sublinear algorithm receives as input."""

    n: int
    m: int
    eps: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.m < 0:
            raise ValueError(f"m must be non-negative, got {self.m}")
        if not 0 < self.eps <= 1:
            raise ValueError(f"eps must lie in (0, 1], got {self.eps}")

    @classmethod
    def of(cls, graph: Graph, eps: float) -> 'GraphParams':
        return cls(n=graph.n, m=graph.m, eps=eps)

    @property
    def avg_degree(self) -> float:
        return 2 * self.m / self.n

    @property
    def edge_density(self) -> float:
        return self.m / self.n
