"""Empirical edge-sampler frequencies against exact outcome enumeration."""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import pandas as pd

from tritest.algorithms.sampler import default_timeout, sample_edge
from tritest.bench.schemas import UNIFORMITY_COLUMNS
from tritest.errors import EmptySupportError
from tritest.exact.distributions import sampler_edge_distribution
from tritest.graph.core import Graph
from tritest.graph.oracle import QueryOracle

logger = logging.getLogger(__name__)


@dataclass
class UniformityReport:
    """
    Per-edge table plus the headline ratios.

    exact_ratio is max/min of the exact conditional probabilities and is at
    most 2 for every graph; empirical_ratio is the same for observed
    frequencies (inf when some edge was never drawn).
    """

    table: pd.DataFrame
    samples: int
    timeouts: int
    mean_attempts: float
    exact_ratio: Fraction
    empirical_ratio: float

    @property
    def max_deviation_sigma(self) -> float:
        return float(self.table['deviation_sigma'].abs().max())


def uniformity_report(graph: Graph, t: int, samples: int, seed: int | None = None,
                      timeout_attempts: int | None = None) -> UniformityReport:
    """
    Draw `samples` edges of H(G, t) and compare their frequencies with the exact distribution.

    Args:
        graph: Desk-scale graph
        t: Threshold
        samples: Number of sampler calls
        seed: Oracle session seed
        timeout_attempts: Sampler budget; defaults to ⌈40·t/d̄⌉

    Returns:
        UniformityReport; table rows follow the lexicographic edge order

    Raises:
        EmptySupportError: when H(G, t) has no edge
    """
    if samples < 1:
        raise ValueError(f"need at least one sample, got {samples}")
    exact = sampler_edge_distribution(graph, t, conditional=True)
    if not exact:
        raise EmptySupportError(f"H(G, t) has no edges at t={t}; nothing to sample")
    per_attempt = sampler_edge_distribution(graph, t)

    oracle = QueryOracle(graph, seed)
    timeout = timeout_attempts or default_timeout(t, graph.n, graph.m)
    hits = Counter()
    attempts = 0
    timeouts = 0
    for _ in range(samples):
        draw = sample_edge(oracle, t, timeout)
        attempts += draw.attempts
        if draw.timed_out:
            timeouts += 1
        else:
            hits[draw.edge] += 1

    drawn = samples - timeouts
    rows = []
    for edge, p in exact.items():
        p = float(p)
        count = hits.get(edge, 0)
        freq = count / drawn if drawn else 0.0
        sigma = math.sqrt(drawn * p * (1 - p)) if drawn else 0.0
        rows.append({
            'u': edge[0],
            'v': edge[1],
            'hits': count,
            'empirical': freq,
            'exact': p,
            'exact_per_attempt': float(per_attempt[edge]),
            'deviation_sigma': (count - drawn * p) / sigma if sigma else 0.0,
        })
    table = pd.DataFrame(rows, columns=UNIFORMITY_COLUMNS)

    exact_values = list(exact.values())
    low = table['empirical'].min()
    logger.debug("uniformity t=%d samples=%d timeouts=%d", t, samples, timeouts)
    return UniformityReport(
        table=table,
        samples=samples,
        timeouts=timeouts,
        mean_attempts=attempts / samples,
        exact_ratio=max(exact_values) / min(exact_values),
        empirical_ratio=float(table['empirical'].max() / low) if low > 0 else math.inf,
    )
