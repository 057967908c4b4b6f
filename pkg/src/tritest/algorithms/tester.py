"""
One-sided-error triangle-freeness tester.

The tester probes Γ*, fixes a threshold t, and then runs ⌈18/ε⌉ rounds of
"sample an edge of H(G, t), and when both endpoints are light look for a
common neighbour". A REJECT always carries a triangle confirmed by three
pair queries, so triangle-free graphs are accepted for every seed.
"""
import logging
import math
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum

from tritest.algorithms.arboricity import VALIDATED_DIVISOR, probe_gamma_star, validated_threshold
from tritest.algorithms.sampler import TIMEOUT_CONSTANT, default_timeout, sample_edge
from tritest.graph.core import GraphParams
from tritest.graph.oracle import QueryLedger, QueryOracle

logger = logging.getLogger(__name__)

PHASES = ('probe', 'sampling', 'classification', 'intersection', 'validation')


class Decision(Enum):
    ACCEPT = 'ACCEPT'
    REJECT = 'REJECT'


class ThresholdMode(Enum):
    """How the sampling threshold is derived from Γ*."""

    VALIDATED = 'validated'  # ⌈Γ*/(24ε)⌉, the threshold the probe certified
    DIRECT = 'direct'        # ⌈Γ*/ε⌉

    @classmethod
    def _missing_(cls, value):
        # 'paper' is the older spelling of DIRECT
        if value == 'paper':
            return cls.DIRECT
        return None

    @classmethod
    def choices(cls) -> list[str]:
        """Accepted spellings, aliases included."""
        return [mode.value for mode in cls] + ['paper']


@dataclass(frozen=True)
class Verdict:
    decision: Decision
    witness: tuple[int, int, int] | None
    rounds_run: int
    gamma_star: int
    threshold: int
    threshold_mode: ThresholdMode
    total_queries: QueryLedger
    phases: dict[str, QueryLedger] = field(default_factory=dict)
    timeouts: int = 0
    seed: int | None = None

    @property
    def rejected(self) -> bool:
        return self.decision is Decision.REJECT

    def to_dict(self) -> dict:
        """JSON-ready view of the verdict."""
        return {
            'decision': self.decision.value,
            'witness': list(self.witness) if self.witness else None,
            'gamma_star': self.gamma_star,
            'threshold': self.threshold,
            'threshold_mode': self.threshold_mode.value,
            'queries': self.total_queries.as_dict(),
            'phases': {name: ledger.as_dict() for name, ledger in self.phases.items()},
            'rounds': self.rounds_run,
            'timeouts': self.timeouts,
            'seed': self.seed,
        }


def intersect_neighborhoods(oracle: QueryOracle, u: int, v: int, t: int,
                            deg_u: int | None = None, deg_v: int | None = None) -> int | None:
    """
    Smallest common neighbour of two light vertices, or None.

    Walks both ascending neighbour lists with two pointers, reading each
    entry with a neighbour query only when the merge reaches it, so at
    most deg(u) + deg(v) ≤ 2t neighbour queries are spent. Degrees already
    known to the caller can be passed in to save the degree queries.

    Example:
        >>> oracle = QueryOracle(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
        >>> intersect_neighborhoods(oracle, 0, 1, t=2)
        2
    """
    if deg_u is None:
        deg_u = oracle.degree_query(u)
    if deg_v is None:
        deg_v = oracle.degree_query(v)
    if deg_u > t or deg_v > t:
        raise ValueError(f"both endpoints must be light at t={t}, got degrees {deg_u} and {deg_v}")

    i = j = 1
    a = oracle.neighbor_query(u, i) if deg_u else None
    b = oracle.neighbor_query(v, j) if deg_v else None
    while a is not None and b is not None:
        if a == b:
            return a
        if a < b:
            i += 1
            a = oracle.neighbor_query(u, i) if i <= deg_u else None
        else:
            j += 1
            b = oracle.neighbor_query(v, j) if j <= deg_v else None
    return None


class TriangleFreenessTester:
    """
    Tester with its constants.

    Args:
        threshold_mode: VALIDATED or DIRECT (see ThresholdMode)
        round_constant: s = ⌈round_constant/ε⌉ rounds
        timeout_constant: sampler budget ⌈c·t/d̄⌉ attempts
        divisor: validated-threshold divisor shared with the probe

    Example:
        >>> tester = TriangleFreenessTester()
        >>> tester.rounds(0.25)
        72
    """

    ROUND_CONSTANT = 18
    TIMEOUT_CONSTANT = TIMEOUT_CONSTANT
    VALIDATED_DIVISOR = VALIDATED_DIVISOR

    def __init__(self, threshold_mode: ThresholdMode | str = ThresholdMode.VALIDATED,
                 round_constant: float | None = None,
                 timeout_constant: float | None = None,
                 divisor: int | None = None):
        self.threshold_mode = ThresholdMode(threshold_mode)
        self.round_constant = round_constant or self.ROUND_CONSTANT
        self.timeout_constant = timeout_constant or self.TIMEOUT_CONSTANT
        self.divisor = divisor or self.VALIDATED_DIVISOR

    def rounds(self, eps: float) -> int:
        return math.ceil(self.round_constant / eps - 1e-9)

    def threshold(self, gamma_star: int, eps: float) -> int:
        if self.threshold_mode is ThresholdMode.DIRECT:
            return max(1, math.ceil(gamma_star / eps - 1e-9))
        return validated_threshold(gamma_star, eps, self.divisor)

    def run(self, oracle: QueryOracle, params: GraphParams) -> Verdict:
        """
        Test one graph.

        Args:
            oracle: Query session, already seeded
            params: (n, m, ε) of the graph behind the oracle

        Returns:
            Verdict; REJECT only with a validated triangle witness
        """
        phases = {name: QueryLedger() for name in PHASES}

        @contextmanager
        def charge(phase):
            before = oracle.ledger.snapshot()
            try:
                yield
            finally:
                phases[phase] = phases[phase] + (oracle.ledger - before)

        def verdict(decision, witness, rounds_run, gamma_star, t, timeouts):
            total = QueryLedger()
            for ledger in phases.values():
                total = total + ledger
            return Verdict(decision, witness, rounds_run, gamma_star, t, self.threshold_mode,
                           total, phases, timeouts, oracle.seed)

        if params.m == 0:
            return verdict(Decision.ACCEPT, None, 0, 1, self.threshold(1, params.eps), 0)

        with charge('probe'):
            probe = probe_gamma_star(oracle, params, self.divisor)
        gamma_star = probe.gamma_star
        t = self.threshold(gamma_star, params.eps)
        timeout = default_timeout(t, params.n, params.m, self.timeout_constant)
        s = self.rounds(params.eps)
        logger.debug("tester gamma*=%d t=%d rounds=%d timeout=%d", gamma_star, t, s, timeout)

        timeouts = 0
        for round_no in range(1, s + 1):
            with charge('sampling'):
                sample = sample_edge(oracle, t, timeout)
            if sample.timed_out:
                timeouts += 1
                continue

            u, v = sample.anchor, sample.other
            with charge('classification'):
                deg_v = oracle.degree_query(v)
            if deg_v > t:
                continue

            with charge('intersection'):
                w = intersect_neighborhoods(oracle, u, v, t, deg_u=sample.anchor_degree, deg_v=deg_v)
            if w is None:
                continue

            with charge('validation'):
                confirmed = (oracle.pair_query(u, v) and oracle.pair_query(u, w)
                             and oracle.pair_query(v, w))
            if not confirmed:
                raise RuntimeError(f"witness {(u, v, w)} failed pair validation")
            witness = tuple(sorted((u, v, w)))
            logger.debug("round %d found triangle %s", round_no, witness)
            return verdict(Decision.REJECT, witness, round_no, gamma_star, t, timeouts)

        return verdict(Decision.ACCEPT, None, s, gamma_star, t, timeouts)


def test_triangle_freeness(oracle: QueryOracle, params: GraphParams, seed: int | None = None,
                           threshold_mode: ThresholdMode | str = ThresholdMode.VALIDATED) -> Verdict:
    """
    Run the tester once.

    Args:
        oracle: Query session over the graph
        params: (n, m, ε)
        seed: When given, the session is reseeded first
        threshold_mode: 'validated' (default) or 'direct'

    Returns:
        Verdict
    """
    if seed is not None:
        oracle.reseed(seed)
    return TriangleFreenessTester(threshold_mode).run(oracle, params)


# not a pytest test despite the name
test_triangle_freeness.__test__ = False
