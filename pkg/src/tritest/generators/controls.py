"""Triangle-free controls and planted-triangle families."""
import numpy as np

from tritest.errors import InfeasibleParametersError
from tritest.generators.families import CertifiedInstance, Family, arboricity_bounds, farness_bound
from tritest.graph.core import Graph
from tritest.utils.random import make_rng, permutation

CONTROL_KINDS = ('tree', 'forest', 'cycle_even', 'bipartite_random', 'complete_bipartite')


def _random_tree_edges(n: int, rng: np.random.Generator) -> np.ndarray:
    # random recursive tree: v attaches to a uniform earlier vertex
    if n < 2:
        return np.zeros((0, 2), dtype=np.int64)
    child = np.arange(1, n)
    parent = np.floor(rng.random(n - 1) * child).astype(np.int64)
    return np.column_stack([parent, child])


def _control_edges(kind: str, n: int, m: int | None, rng: np.random.Generator) -> np.ndarray:
    family = Family.TRIANGLE_FREE_CONTROL.value
    a, b = n // 2, n - n // 2

    if kind == 'tree':
        if n < 1 or (m is not None and m != n - 1):
            raise InfeasibleParametersError(family, [f"a tree on n = {n} vertices has n-1 edges, got m = {m}"])
        return _random_tree_edges(n, rng)

    if kind == 'forest':
        m = n // 2 if m is None else m
        if not 0 <= m <= max(n - 1, 0):
            raise InfeasibleParametersError(family, [f"a forest on n = {n} vertices has at most n-1 edges, got m = {m}"])
        tree = _random_tree_edges(n, rng)
        keep = np.sort(rng.choice(tree.shape[0], size=m, replace=False)) if m else np.zeros(0, dtype=np.int64)
        return tree[keep]

    if kind == 'cycle_even':
        violations = []
        if n < 4 or n % 2:
            violations.append(f"an even cycle needs an even n ≥ 4, got n = {n}")
        if m is not None and m != n:
            violations.append(f"a cycle on n vertices has n edges, got m = {m}")
        if violations:
            raise InfeasibleParametersError(family, violations)
        v = np.arange(n)
        return np.column_stack([v, (v + 1) % n])

    if kind == 'bipartite_random':
        m = min(a * b, 2 * n) if m is None else m
        if not 0 <= m <= a * b:
            raise InfeasibleParametersError(
                family, [f"bipartite_random on n = {n} holds at most {a * b} edges, got m = {m}"])
        cells = np.sort(rng.choice(a * b, size=m, replace=False)) if m else np.zeros(0, dtype=np.int64)
        return np.column_stack([cells // b, a + cells % b])

    if kind == 'complete_bipartite':
        if m is not None and m != a * b:
            raise InfeasibleParametersError(family, [f"K_{{{a},{b}}} has {a * b} edges, got m = {m}"])
        left = np.arange(a)
        return np.column_stack([np.repeat(left, b), np.tile(np.arange(a, n), a)])

    raise InfeasibleParametersError(family, [f"unknown control kind {kind!r}; expected one of {', '.join(CONTROL_KINDS)}"])


def gen_triangle_free_control(kind: str, n: int, m: int | None = None, seed: int | None = None) -> CertifiedInstance:
    """
    Triangle-free graph of the given kind.

    Kinds: tree (m = n-1), forest (default m = n/2), cycle_even (m = n),
    bipartite_random (m uniform cells of K_{⌊n/2⌋,⌈n/2⌉}, default
    min(⌊n/2⌋·⌈n/2⌉, 2n)) and complete_bipartite. Every kind is a forest or
    bipartite, hence triangle-free by construction.

    Raises:
        InfeasibleParametersError: on an unknown kind or an edge count the kind cannot hold
    """
    rng = make_rng(seed)
    graph = Graph.from_edges(n, _control_edges(kind, n, m, rng))
    upper, lower, witness = arboricity_bounds(graph)
    return CertifiedInstance(graph, upper, lower, farness_bound(0, graph.m), 0,
                             Family.TRIANGLE_FREE_CONTROL.value, witness,
                             {'kind': kind, 'n': n, 'm': m, 'seed': seed})


def _capped_random_edges(vertices: np.ndarray, d: int, bipartite: bool,
                         rng: np.random.Generator) -> np.ndarray:
    """Union of d random matchings over `vertices`, so no vertex exceeds degree d."""
    size = vertices.size
    if d == 0 or size < 2:
        return np.zeros((0, 2), dtype=np.int64)
    half = size // 2
    parts = []
    for _ in range(d):
        if bipartite:
            # first half of the ids against a shuffle of the second half
            left = vertices[:half]
            right = vertices[half:][rng.permutation(size - half)[:half]]
        else:
            order = rng.permutation(size)
            left = vertices[order[:half]]
            right = vertices[order[half:2 * half]]
        parts.append(np.column_stack([np.minimum(left, right), np.maximum(left, right)]))
    return np.unique(np.concatenate(parts), axis=0)


def gen_planted(n: int, d: int, k: int, seed: int | None = None,
                bipartite_base: bool = True) -> CertifiedInstance:
    """
    k vertex-disjoint triangles next to a random base graph of max degree ≤ d.

    The triangles occupy 3k vertices and the base lives on the remaining
    n - 3k. With a bipartite base the planted triangles are the only ones.
    When a seed is given, vertex ids are shuffled with it.

    Args:
        n: Vertex count
        d: Degree cap of the base graph
        k: Number of planted triangles
        seed: Seed for the base graph and the relabelling
        bipartite_base: Draw the base between two fixed halves of its vertices

    Returns:
        CertifiedInstance with at least k edge-disjoint triangles

    Raises:
        InfeasibleParametersError: when 3k > n or d, k are negative
    """
    violations = []
    if k < 0:
        violations.append(f"k must be non-negative, got {k}")
    if d < 0:
        violations.append(f"d must be non-negative, got {d}")
    if 3 * k > n:
        violations.append(f"3k = {3 * k} planted vertices exceed n = {n}")
    if violations:
        raise InfeasibleParametersError(Family.PLANTED_TRIANGLES.value, violations)

    rng = make_rng(seed)
    corners = np.arange(k) * 3
    triangles = np.concatenate([
        np.column_stack([corners, corners + 1]),
        np.column_stack([corners, corners + 2]),
        np.column_stack([corners + 1, corners + 2]),
    ])
    base = _capped_random_edges(np.arange(3 * k, n), d, bipartite_base, rng)
    graph = Graph.from_edges(n, np.concatenate([triangles, base]))
    if seed is not None:
        graph = graph.relabel(permutation(n, seed))

    upper, lower, witness = arboricity_bounds(graph)
    return CertifiedInstance(graph, upper, lower, farness_bound(k, graph.m), k,
                             Family.PLANTED_TRIANGLES.value, witness,
                             {'n': n, 'd': d, 'k': k, 'seed': seed, 'bipartite_base': bipartite_base})
