"""Monte-Carlo estimate of the number of edges of H(G, t)."""
import logging
import math
from dataclasses import dataclass

import numpy as np

from tritest.errors import UndefinedDensityError
from tritest.graph.oracle import QueryLedger, QueryOracle
from tritest.graph.subgraph import orientation_is_out

logger = logging.getLogger(__name__)

# Multiplier in front of ln(2/δ)·ε⁻²·t/(m/n); covers the Chernoff factor 4
# and the (1-2ε)/2 slack on E[X_1] when m' ≥ (1-2ε)m.
SAMPLE_SIZE_CONSTANT = 16

# Samples drawn per vectorised block.
BLOCK_SIZE = 1 << 20


def sample_size(eps: float, t: int, n: int, m: int, fail_prob: float,
                constant: float = SAMPLE_SIZE_CONSTANT) -> int:
    """
    Number of vertex samples r for a (1 ± eps) estimate with failure probability fail_prob.

    r = ⌈constant · ln(2/fail_prob) · eps⁻² · t / (m/n)⌉

    Args:
        eps: Relative accuracy in (0, 1]
        t: Threshold (≥ 1)
        n: Vertex count
        m: Edge count
        fail_prob: Target failure probability in (0, 1)
        constant: Leading constant

    Returns:
        Sample size r ≥ 1

    Raises:
        UndefinedDensityError: when m = 0

    Example:
        >>> sample_size(1.0, 1, 10, 10, 2 / math.e ** 4)
        64
    """
    if not 0 < eps <= 1:
        raise ValueError(f"eps must lie in (0, 1], got {eps}")
    if t < 1:
        raise ValueError(f"threshold must be at least 1, got {t}")
    if not 0 < fail_prob < 1:
        raise ValueError(f"fail_prob must lie in (0, 1), got {fail_prob}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if m <= 0:
        raise UndefinedDensityError("sample size needs m ≥ 1 (edge density m/n is zero)")
    raw = constant * math.log(2 / fail_prob) * t / (eps ** 2 * (m / n))
    # absorb float noise before rounding up
    return max(1, math.ceil(raw - 1e-9))


@dataclass(frozen=True)
class EstimatorConfig:
    """Inputs of one edge-count estimate."""

    eps: float
    t: int
    fail_prob: float
    n: int
    m: int

    def __post_init__(self):
        # sample_size validates every field
        sample_size(self.eps, self.t, self.n, self.m, self.fail_prob)

    @property
    def sample_size(self) -> int:
        return sample_size(self.eps, self.t, self.n, self.m, self.fail_prob)


@dataclass(frozen=True)
class EdgeCountEstimate:
    """Result of estimate_edges."""

    value: float
    samples_used: int
    queries_used: QueryLedger
    seed: int | None


def estimate_edges(oracle: QueryOracle, config: EstimatorConfig) -> EdgeCountEstimate:
    """
    Estimate m' = |E(H(G, t))|.

    Draws r vertices uniformly with replacement. A heavy or isolated vertex
    contributes X_i = 0 after its degree query. A light vertex v draws one
    uniform neighbour u; Y_i = 1 when {v, u} leaves v in D(G, t), and
    X_i = deg(v)·Y_i/t. The estimate is X = (t·n/r)·ΣX_i, which is unbiased
    for m'. Each sample costs at most 2 degree queries and 1 neighbour query.

    Args:
        oracle: Query session; its generator drives the sampling
        config: Accuracy, threshold, failure probability and (n, m)

    Returns:
        EdgeCountEstimate with the value, r and the queries spent
    """
    if config.n != oracle.n:
        raise ValueError(f"config is for n={config.n} but the oracle has n={oracle.n}")

    r = config.sample_size
    t = config.t
    rng = oracle.rng
    before = oracle.ledger.snapshot()

    weighted_hits = 0
    remaining = r
    while remaining:
        block = min(remaining, BLOCK_SIZE)
        remaining -= block

        vertices = rng.integers(0, oracle.n, size=block)
        deg = oracle.degree_batch(vertices)
        active = (deg > 0) & (deg <= t)
        if not active.any():
            continue
        v_act = vertices[active]
        d_act = deg[active]
        picks = rng.integers(1, d_act + 1)
        u = oracle.neighbor_batch(v_act, picks)
        deg_u = oracle.degree_batch(u)
        out = orientation_is_out(v_act, d_act, u, deg_u, t)
        weighted_hits += int(d_act[out].sum())

    # (t·n/r)·Σ deg(v_i)·Y_i/t
    value = config.n * weighted_hits / r
    used = oracle.ledger - before
    logger.debug("estimate t=%d r=%d -> %.3f (%d queries)", t, r, value, used.total)
    return EdgeCountEstimate(value=value, samples_used=r, queries_used=used, seed=oracle.seed)


def repeat_estimates(oracle: QueryOracle, config: EstimatorConfig, trials: int) -> np.ndarray:
    """Run estimate_edges `trials` times on one session; returns the estimates."""
    return np.array([estimate_edges(oracle, config).value for _ in range(trials)])
