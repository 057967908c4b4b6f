"""
Certified graph families.

Every constructor returns a CertifiedInstance: the graph together with
arboricity bounds and a farness lower bound backed by an explicit
edge-disjoint triangle count. The three lower-bound families are

- LB_MATCHINGS: V1 × V3 and V2 × V3 complete bipartite, plus Γ/2 cyclic-shift
  perfect matchings between V1 and V2. Every matching edge closes a triangle
  with its own V3 vertex, so m/3 edge-disjoint triangles exist.
- LB_ISOLATED_PAD: a base instance plus isolated vertices.
- LB_BIPARTITE_PAD: a base instance plus K_{Γ,Γ} plus isolated vertices.
"""
import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path

import numpy as np

from tritest.errors import InfeasibleParametersError
from tritest.exact.arboricity import core_numbers, density_bound, exact_arboricity_small, EXACT_ARBORICITY_MAX_N
from tritest.exact.triangles import greedy_packing
from tritest.graph.core import Graph
from tritest.graph.loaders import save_graph
from tritest.utils.random import permutation

logger = logging.getLogger(__name__)


class Family(Enum):
    LB_MATCHINGS = 'lb_matchings'
    LB_ISOLATED_PAD = 'lb_isolated_pad'
    LB_BIPARTITE_PAD = 'lb_bipartite_pad'
    PLANTED_TRIANGLES = 'planted'
    TRIANGLE_FREE_CONTROL = 'control'


@dataclass(frozen=True)
class FamilySpec:
    """
    Parameters of one generated instance.

    For the padded families, (m, gamma) describe the LB_MATCHINGS base and
    n the padded vertex count. kind is the control kind; d and k are the
    planted family's degree cap and triangle count.
    """

    family: Family
    n: int
    m: int | None = None
    gamma: int | None = None
    seed: int | None = None
    kind: str | None = None
    d: int | None = None
    k: int | None = None

    def __post_init__(self):
        object.__setattr__(self, 'family', Family(self.family))


@dataclass(frozen=True)
class CertifiedInstance:
    """
    A graph with certified bounds.

    arboricity_lower ≤ Γ(G) ≤ arboricity_upper, and the graph holds at least
    disjoint_triangles_lower edge-disjoint triangles, so at least that many
    edges must be deleted and it is farness_lower-far from triangle-free.
    """

    graph: Graph
    arboricity_upper: int
    arboricity_lower: int
    farness_lower: Fraction
    disjoint_triangles_lower: int
    family: str = 'custom'
    lower_witness: str = ''
    params: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def metadata(self) -> dict:
        """JSON-ready certificate and achieved parameters."""
        return {
            'family': self.family,
            'n': self.n,
            'm': self.m,
            'params': self.params,
            'arboricity_upper': self.arboricity_upper,
            'arboricity_lower': self.arboricity_lower,
            'arboricity_lower_witness': self.lower_witness,
            'farness_lower': str(self.farness_lower),
            'farness_lower_float': float(self.farness_lower),
            'disjoint_triangles_lower': self.disjoint_triangles_lower,
        }


def farness_bound(triangles: int, m: int) -> Fraction:
    """Edge-disjoint triangle count over m; each such triangle costs one deletion."""
    return Fraction(triangles, m) if m else Fraction(0)


def arboricity_bounds(graph: Graph) -> tuple[int, int, str]:
    """
    (upper, lower, witness) arboricity bounds.

    The upper bound is the degeneracy. The lower bound is the best
    ⌈e(S)/(|S|-1)⌉ over two named subgraphs, the non-isolated vertices and
    the top core, or the exact value for small graphs.
    """
    if graph.m == 0:
        return 0, 0, 'empty'
    core = core_numbers(graph)
    upper = int(core.max())
    if graph.n <= EXACT_ARBORICITY_MAX_N:
        return upper, exact_arboricity_small(graph), 'exact'

    deg = graph.degrees()
    lower = density_bound(graph.m, int(np.count_nonzero(deg)))
    witness = 'non_isolated'

    top = core == upper
    edges = graph.edge_array()
    inside = int(np.count_nonzero(top[edges[:, 0]] & top[edges[:, 1]]))
    top_bound = density_bound(inside, int(np.count_nonzero(top)))
    if top_bound > lower:
        lower, witness = top_bound, f'{upper}_core'
    return upper, lower, witness


def certify(graph: Graph, family: str = 'custom', params: dict | None = None) -> CertifiedInstance:
    """Derive certificates for an arbitrary graph with the exact oracles."""
    upper, lower, witness = arboricity_bounds(graph)
    packed = len(greedy_packing(graph))
    return CertifiedInstance(graph, upper, lower, farness_bound(packed, graph.m), packed,
                             family, witness, dict(params or {}))


def _relabel(graph: Graph, seed: int | None) -> Graph:
    if seed is None:
        return graph
    return graph.relabel(permutation(graph.n, seed))


def matchings_layout(m: int, gamma: int, strict: bool = True) -> tuple[int, int]:
    """
    (|V1|, |V3|) of the matchings family: |V1| = |V2| = 2m/(3Γ), |V3| = Γ/2.

    With strict=False a non-integral 2m/(3Γ) is rounded down.
    """
    violations = []
    if gamma < 2 or gamma % 2:
        violations.append(f"gamma must be even and at least 2, got {gamma}")
    if m < 1:
        violations.append(f"m must be positive, got {m}")
    if violations:
        raise InfeasibleParametersError(Family.LB_MATCHINGS.value, violations)
    if strict and (2 * m) % (3 * gamma):
        raise InfeasibleParametersError(Family.LB_MATCHINGS.value,
                                        [f"3·gamma = {3 * gamma} must divide 2m = {2 * m}"])
    return (2 * m) // (3 * gamma), gamma // 2


def gen_lb_matchings(n: int, m: int, gamma: int, seed: int | None = None,
                     strict: bool = True) -> CertifiedInstance:
    """
    Lower-bound family with arboricity exactly Γ and farness 1/3.

    Args:
        n: Vertex count (the rest of the vertices stay isolated)
        m: Target edge count
        gamma: Even arboricity Γ
        seed: When given, vertex ids are shuffled with this seed
        strict: Raise on divisibility slack instead of rounding |V1| down

    Returns:
        CertifiedInstance with m/3 edge-disjoint triangles

    Raises:
        InfeasibleParametersError: listing every violated constraint

    Example:
        >>> inst = gen_lb_matchings(20, 24, 4)
        >>> inst.m, inst.arboricity_upper, inst.disjoint_triangles_lower
        (24, 4, 8)
    """
    side, half = matchings_layout(m, gamma, strict)
    violations = []
    if side < 1:
        violations.append(f"2m/(3·gamma) = {2 * m / (3 * gamma):.3f} leaves V1 empty")
    if half > side:
        violations.append(f"gamma/2 = {half} matchings need |V1| ≥ {half}, got {side}")
    if 2 * side + half > n:
        violations.append(f"2·|V1| + gamma/2 = {2 * side + half} vertices exceed n = {n}")
    if violations:
        raise InfeasibleParametersError(Family.LB_MATCHINGS.value, violations)

    v1 = np.arange(side)
    v2 = v1 + side
    v3 = np.arange(half) + 2 * side
    parts = [
        np.column_stack([np.repeat(v1, half), np.tile(v3, side)]),
        np.column_stack([np.repeat(v2, half), np.tile(v3, side)]),
    ]
    for k in range(half):
        parts.append(np.column_stack([v1, side + (v1 + k) % side]))
    graph = _relabel(Graph.from_edges(n, np.concatenate(parts)), seed)

    achieved_m = 3 * side * half
    if achieved_m != m:
        logger.info("matchings family rounded m=%d down to %d", m, achieved_m)
    triangles = side * half
    non_isolated = 2 * side + half
    return CertifiedInstance(
        graph=graph,
        arboricity_upper=gamma,
        arboricity_lower=density_bound(achieved_m, non_isolated),
        farness_lower=farness_bound(triangles, achieved_m),
        disjoint_triangles_lower=triangles,
        family=Family.LB_MATCHINGS.value,
        lower_witness='non_isolated',
        params={'n': n, 'm': m, 'gamma': gamma, 'seed': seed, 'v1': side, 'v3': half},
    )


def _as_instance(base: Graph | CertifiedInstance) -> CertifiedInstance:
    return base if isinstance(base, CertifiedInstance) else certify(base)


def gen_lb_isolated_pad(base: Graph | CertifiedInstance, n: int) -> CertifiedInstance:
    """
    Pad a base graph with isolated vertices up to n.

    m, the triangle set and the arboricity are unchanged.

    Raises:
        InfeasibleParametersError: when n < base.n
    """
    inst = _as_instance(base)
    if n < inst.n:
        raise InfeasibleParametersError(Family.LB_ISOLATED_PAD.value,
                                        [f"n = {n} is below the base vertex count {inst.n}"])
    return CertifiedInstance(
        graph=inst.graph.with_isolated(n),
        arboricity_upper=inst.arboricity_upper,
        arboricity_lower=inst.arboricity_lower,
        farness_lower=inst.farness_lower,
        disjoint_triangles_lower=inst.disjoint_triangles_lower,
        family=Family.LB_ISOLATED_PAD.value,
        lower_witness=inst.lower_witness,
        params={'n': n, 'base': inst.family, 'base_n': inst.n},
    )


def gen_lb_bipartite_pad(base: Graph | CertifiedInstance, gamma: int, n: int) -> CertifiedInstance:
    """
    base ⊎ K_{Γ,Γ} ⊎ isolated vertices, n vertices in total.

    The complete bipartite block adds Γ² edges and no triangle, so farness
    scales by base.m/(base.m + Γ²).

    Raises:
        InfeasibleParametersError: on n < base.n + 2Γ, or when the base has a vertex of
            degree > Γ and degeneracy > Γ (so its arboricity may exceed Γ)
    """
    inst = _as_instance(base)
    violations = []
    if gamma < 1:
        violations.append(f"gamma must be positive, got {gamma}")
    if n < inst.n + 2 * gamma:
        violations.append(f"n = {n} cannot hold the base ({inst.n}) plus 2·gamma = {2 * gamma} vertices")
    if inst.graph.max_degree > gamma and inst.arboricity_upper > gamma:
        violations.append(f"base max degree {inst.graph.max_degree} and degeneracy {inst.arboricity_upper} "
                          f"both exceed gamma = {gamma}")
    if violations:
        raise InfeasibleParametersError(Family.LB_BIPARTITE_PAD.value, violations)

    left = np.arange(gamma)
    block = Graph.from_edges(2 * gamma, np.column_stack([np.repeat(left, gamma), np.tile(left + gamma, gamma)]))
    pad = Graph.empty(n - inst.n - 2 * gamma)
    graph = Graph.disjoint_union(inst.graph, block, pad)

    block_lower = density_bound(gamma * gamma, 2 * gamma)
    lower, witness = inst.arboricity_lower, inst.lower_witness
    if block_lower > lower:
        lower, witness = block_lower, 'bipartite_block'
    return CertifiedInstance(
        graph=graph,
        arboricity_upper=max(inst.arboricity_upper, gamma),
        arboricity_lower=lower,
        farness_lower=farness_bound(inst.disjoint_triangles_lower, graph.m),
        disjoint_triangles_lower=inst.disjoint_triangles_lower,
        family=Family.LB_BIPARTITE_PAD.value,
        lower_witness=witness,
        params={'n': n, 'gamma': gamma, 'base': inst.family, 'base_n': inst.n, 'base_m': inst.m},
    )


def generate(spec: FamilySpec) -> CertifiedInstance:
    """Build the instance a FamilySpec describes."""
    from tritest.generators.controls import gen_planted, gen_triangle_free_control

    family = spec.family
    if family is Family.TRIANGLE_FREE_CONTROL:
        return gen_triangle_free_control(spec.kind or 'tree', spec.n, spec.m, spec.seed)
    if family is Family.PLANTED_TRIANGLES:
        return gen_planted(spec.n, spec.d or 0, spec.k or 0, spec.seed)

    if spec.m is None or spec.gamma is None:
        raise InfeasibleParametersError(family.value, ["m and gamma are required"])
    if family is Family.LB_MATCHINGS:
        return gen_lb_matchings(spec.n, spec.m, spec.gamma, spec.seed)

    side, half = matchings_layout(spec.m, spec.gamma)
    base = gen_lb_matchings(2 * side + half, spec.m, spec.gamma, spec.seed)
    if family is Family.LB_ISOLATED_PAD:
        return gen_lb_isolated_pad(base, spec.n)
    return gen_lb_bipartite_pad(base, spec.gamma, spec.n)


def save_instance(instance: CertifiedInstance, file_path: str | Path) -> Path:
    """
    Write the edge list to file_path and the certificate to file_path + '.json'.

    Returns:
        Path of the JSON sidecar
    """
    file_path = Path(file_path)
    save_graph(instance.graph, file_path)
    sidecar = file_path.with_name(file_path.name + '.json')
    with open(sidecar, 'w', encoding='utf-8') as f:
        json.dump(instance.metadata(), f, indent=2, sort_keys=True)
        f.write('\n')
    return sidecar
