"""Brute-force triangle oracles: enumeration, greedy packing, deletion distance."""
from dataclasses import dataclass, field

from tritest.errors import ScaleError
from tritest.graph.core import Graph

# exhaustive deletion search is exponential in the number of deletions
DELETION_DISTANCE_MAX_N = 10


@dataclass(frozen=True)
class TrianglePacking:
    triangles: list[tuple[int, int, int]] = field(default_factory=list)
    edges_deleted: int = 0

    def __len__(self) -> int:
        return len(self.triangles)


def _adjacency_sets(graph: Graph) -> list[set[int]]:
    return [set(nb) for nb in graph.adjacency()]


def enumerate_triangles(graph: Graph) -> list[tuple[int, int, int]]:
    """
    All triangles (u, v, w) with u < v < w, in lexicographic order.

    Example:
        >>> enumerate_triangles(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
        [(0, 1, 2)]
    """
    adj = _adjacency_sets(graph)
    found = []
    for u in range(graph.n):
        higher = sorted(x for x in adj[u] if x > u)
        for i, v in enumerate(higher):
            for w in higher[i + 1:]:
                if w in adj[v]:
                    found.append((u, v, w))
    return found


def count_triangles(graph: Graph) -> int:
    return len(enumerate_triangles(graph))


def is_triangle_free(graph: Graph) -> bool:
    return find_triangle(graph) is None


def find_triangle(graph: Graph) -> tuple[int, int, int] | None:
    """Lexicographically first triangle, or None."""
    return _first_triangle(_adjacency_sets(graph), graph.n)


def _first_triangle(adj: list[set[int]], n: int) -> tuple[int, int, int] | None:
    for u in range(n):
        higher = sorted(x for x in adj[u] if x > u)
        for i, v in enumerate(higher):
            for w in higher[i + 1:]:
                if w in adj[v]:
                    return u, v, w
    return None


def greedy_packing(graph: Graph) -> TrianglePacking:
    """
    Edge-disjoint triangle packing by repeated extraction.

    Takes the lexicographically first triangle of the residual graph,
    deletes its three edges and repeats until no triangle is left. A single
    lexicographic sweep does this: deleting edges never creates a
    triangle, so triangles already passed over stay absent.

    Returns:
        TrianglePacking with the extracted triangles in extraction order
    """
    adj = _adjacency_sets(graph)
    packed = []
    for u in range(graph.n):
        for v in sorted(x for x in adj[u] if x > u):
            if v not in adj[u]:
                continue
            common = sorted(x for x in adj[u] & adj[v] if x > v)
            if not common:
                continue
            w = common[0]
            packed.append((u, v, w))
            for a, b in ((u, v), (u, w), (v, w)):
                adj[a].discard(b)
                adj[b].discard(a)
    return TrianglePacking(packed, 3 * len(packed))


def triangle_deletion_distance(graph: Graph) -> int:
    """
    Minimum number of edge deletions that leave the graph triangle-free.

    Iterative deepening from the greedy packing size (a lower bound: each
    packed triangle needs its own deletion). At every node one uncovered
    triangle is found and the search branches on its three edges.

    Raises:
        ScaleError: when n > DELETION_DISTANCE_MAX_N
    """
    if graph.n > DELETION_DISTANCE_MAX_N:
        raise ScaleError(f"deletion distance is exhaustive and limited to n ≤ {DELETION_DISTANCE_MAX_N}, "
                         f"got n={graph.n}; use greedy_packing for a lower bound")
    n = graph.n
    failed: set[tuple[frozenset, int]] = set()

    def solvable(edges: frozenset, budget: int) -> bool:
        if (edges, budget) in failed:
            return False
        adj = [set() for _ in range(n)]
        for a, b in edges:
            adj[a].add(b)
            adj[b].add(a)
        tri = _first_triangle(adj, n)
        if tri is None:
            return True
        if budget > 0:
            u, v, w = tri
            for e in ((u, v), (u, w), (v, w)):
                if solvable(edges - {e}, budget - 1):
                    return True
        failed.add((edges, budget))
        return False

    edges = frozenset(graph.edges())
    k = len(greedy_packing(graph))
    while not solvable(edges, k):
        k += 1
    return k
