"""Doubling search for Γ*, the effective-arboricity scale of a graph."""
import logging
import math
from dataclasses import dataclass, field

from tritest.algorithms.estimator import EstimatorConfig, estimate_edges
from tritest.graph.core import GraphParams
from tritest.graph.oracle import QueryLedger, QueryOracle

logger = logging.getLogger(__name__)

# t_i = ⌈Γ_i / (VALIDATED_DIVISOR·ε)⌉, and the estimator runs at accuracy ε/VALIDATED_DIVISOR.
VALIDATED_DIVISOR = 24


def validated_threshold(gamma: int, eps: float, divisor: int = VALIDATED_DIVISOR) -> int:
    """Threshold ⌈Γ/(divisor·ε)⌉ at which a scale Γ is validated (at least 1)."""
    return max(1, math.ceil(gamma / (divisor * eps) - 1e-9))


def loop_bound(n: int, eps: float, divisor: int = VALIDATED_DIVISOR) -> int:
    """
    Number of doubling iterations.

    ⌈log₂ n⌉ iterations, plus enough extra that the last validated threshold
    ⌈Γ_L/(divisor·ε)⌉ reaches n, where no vertex is heavy and H(G, t) = G.
    """
    log_n = max(1, (n - 1).bit_length())
    scale = divisor * eps
    extra = max(0, math.ceil(math.log2(scale) - 1e-9)) if scale > 1 else 0
    return log_n + extra + 1


@dataclass(frozen=True)
class ProbeIteration:
    gamma: int
    threshold: int
    estimate: float
    samples: int


@dataclass(frozen=True)
class ProbeResult:
    """
    Outcome of probe_gamma_star.

    gamma_star is always 2^(iterations-1). exhausted is set when every
    iteration doubled, which the estimator's success event rules out.
    """

    gamma_star: int
    iterations: int
    threshold: int
    per_iteration: list[ProbeIteration] = field(default_factory=list)
    queries_used: QueryLedger = field(default_factory=QueryLedger)
    exhausted: bool = False


def probe_gamma_star(oracle: QueryOracle, params: GraphParams,
                     divisor: int = VALIDATED_DIVISOR) -> ProbeResult:
    """
    Compute Γ* by doubling.

    Starting at Γ_1 = 1, iteration i estimates |E(H(G, t_i))| at
    t_i = ⌈Γ_i/(divisor·ε)⌉ with accuracy ε/divisor and failure probability
    1/(6L) for L iterations, and stops at the first Γ_i whose estimate Z_i
    exceeds (1 - ε/12)·m. With probability at least 5/6 the returned
    threshold keeps at least (1 - ε/6)·m edges.

    Args:
        oracle: Query session
        params: (n, m, ε)
        divisor: Constant in the validated threshold and the estimator accuracy

    Returns:
        ProbeResult with Γ*, the per-iteration trace and the queries spent
    """
    eps = params.eps
    if params.m == 0:
        return ProbeResult(gamma_star=1, iterations=1, threshold=validated_threshold(1, eps, divisor))

    before = oracle.ledger.snapshot()
    bound = loop_bound(params.n, eps, divisor)
    fail_prob = 1 / (6 * bound)
    bar = (1 - eps / 12) * params.m
    trace = []

    gamma = 1
    for i in range(1, bound + 1):
        t = validated_threshold(gamma, eps, divisor)
        config = EstimatorConfig(eps=eps / divisor, t=t, fail_prob=fail_prob, n=params.n, m=params.m)
        estimate = estimate_edges(oracle, config)
        trace.append(ProbeIteration(gamma, t, estimate.value, estimate.samples_used))
        logger.debug("probe i=%d gamma=%d t=%d Z=%.2f bar=%.2f", i, gamma, t, estimate.value, bar)

        if estimate.value > bar:
            return ProbeResult(gamma, i, t, trace, oracle.ledger - before)
        if i < bound:
            gamma *= 2

    logger.warning("probe exhausted %d iterations without clearing %.2f edges; returning gamma=%d",
                   bound, bar, gamma)
    return ProbeResult(gamma, bound, validated_threshold(gamma, eps, divisor), trace,
                       oracle.ledger - before, exhausted=True)
