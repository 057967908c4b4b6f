"""Rejection sampler for edges of H(G, t)."""
import logging
import math
from dataclasses import dataclass

from tritest.errors import UndefinedDensityError
from tritest.graph.oracle import QueryOracle

logger = logging.getLogger(__name__)

# timeout = ⌈TIMEOUT_CONSTANT · t / d̄⌉ attempts
TIMEOUT_CONSTANT = 40


@dataclass(frozen=True)
class EdgeSample:
    """
    One sampler call.

    edge is (min, max) and anchor is the light endpoint the edge was
    reached from; both are None when the call timed out.
    """

    edge: tuple[int, int] | None
    anchor: int | None
    anchor_degree: int | None
    attempts: int
    timed_out: bool

    @property
    def other(self) -> int | None:
        if self.edge is None:
            return None
        a, b = self.edge
        return b if self.anchor == a else a


def default_timeout(t: int, n: int, m: int, constant: float = TIMEOUT_CONSTANT) -> int:
    """
    Attempt budget ⌈constant·t/d̄⌉ with d̄ = 2m/n.

    Raises:
        UndefinedDensityError: when m = 0
    """
    if t < 1:
        raise ValueError(f"threshold must be at least 1, got {t}")
    if m <= 0:
        raise UndefinedDensityError("sampler timeout needs m ≥ 1 (average degree is zero)")
    return max(1, math.ceil(constant * t * n / (2 * m) - 1e-9))


def sample_edge(oracle: QueryOracle, t: int, timeout_attempts: int) -> EdgeSample:
    """
    Draw an edge of H(G, t), each edge with probability within a factor 2 of uniform.

    Each attempt picks a uniform vertex v and a uniform j in [1, t], spends
    one degree query on v, and succeeds when v is light and has a j-th
    neighbour u, read with one neighbour query. Light-light edges are hit
    from both endpoints, light-heavy edges only from the light one.

    Args:
        oracle: Query session
        t: Threshold
        timeout_attempts: Attempts before giving up

    Returns:
        EdgeSample; timed_out is set when every attempt failed
    """
    if t < 1:
        raise ValueError(f"threshold must be at least 1, got {t}")
    if timeout_attempts < 1:
        raise ValueError(f"timeout must allow at least one attempt, got {timeout_attempts}")

    rng = oracle.rng
    n = oracle.n
    for attempt in range(1, timeout_attempts + 1):
        v = int(rng.integers(n))
        j = int(rng.integers(1, t + 1))
        deg, u = oracle.jth_neighbor(v, j, max_degree=t)
        if u is None:
            continue
        return EdgeSample((min(u, v), max(u, v)), v, deg, attempt, False)

    logger.warning("sampler timed out after %d attempts at t=%d", timeout_attempts, t)
    return EdgeSample(None, None, None, timeout_attempts, True)


def sample_edges(oracle: QueryOracle, t: int, count: int,
                 timeout_attempts: int | None = None) -> list[EdgeSample]:
    """Run sample_edge `count` times on one session (default timeout from the oracle's n, m)."""
    if timeout_attempts is None:
        timeout_attempts = default_timeout(t, oracle.n, oracle.m)
    return [sample_edge(oracle, t, timeout_attempts) for _ in range(count)]
