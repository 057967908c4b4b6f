"""Tests for the H(G, t) edge sampler."""
import logging
from collections import Counter
from fractions import Fraction

import pytest

from tests.graphs import random_graph
from tritest.algorithms.sampler import default_timeout, sample_edge, sample_edges
from tritest.errors import UndefinedDensityError
from tritest.exact.distributions import sampler_edge_distribution
from tritest.graph.core import Graph
from tritest.graph.oracle import QueryOracle
from tritest.utils.stats import binomial_sigma


class TestTimeout:
    """Tests for default_timeout."""

    def test_value(self):
        assert default_timeout(2, 3, 3) == 40

    def test_scales_with_threshold(self):
        assert default_timeout(4, 3, 3) == 80

    def test_custom_constant(self):
        assert default_timeout(2, 3, 3, constant=10) == 10

    def test_empty_graph(self):
        with pytest.raises(UndefinedDensityError):
            default_timeout(1, 5, 0)


class TestSampleEdge:
    """Tests for sample_edge."""

    def test_k3_succeeds_first_attempt(self, k3):
        oracle = QueryOracle(k3, seed=0)
        for _ in range(20):
            draw = sample_edge(oracle, 2, 40)
            assert not draw.timed_out
            assert draw.attempts == 1
            assert k3.has_edge(*draw.edge)
        assert oracle.ledger.degree_queries == 20
        assert oracle.ledger.neighbor_queries == 20

    def test_timeout_when_everything_is_heavy(self, k3, caplog):
        oracle = QueryOracle(k3, seed=0)
        with caplog.at_level(logging.WARNING, logger='tritest.algorithms.sampler'):
            draw = sample_edge(oracle, 1, 25)
        assert draw.timed_out
        assert draw.edge is None
        assert draw.other is None
        assert draw.attempts == 25
        assert oracle.ledger.degree_queries == 25
        assert oracle.ledger.neighbor_queries == 0
        assert 'timed out' in caplog.text

    def test_ledger_per_attempt(self, small_corpus):
        for g in small_corpus:
            oracle = QueryOracle(g, seed=1)
            draws = sample_edges(oracle, max(1, g.max_degree // 2), 50)
            attempts = sum(d.attempts for d in draws)
            successes = sum(not d.timed_out for d in draws)
            assert oracle.ledger.degree_queries == attempts
            assert oracle.ledger.neighbor_queries == successes
            assert oracle.ledger.pair_queries == 0

    def test_never_returns_heavy_heavy_or_non_edges(self, small_corpus):
        for g in small_corpus:
            for t in range(1, g.max_degree + 1):
                deg = g.degrees()
                for draw in sample_edges(QueryOracle(g, seed=t), t, 30):
                    if draw.timed_out:
                        continue
                    u, v = draw.edge
                    assert u < v
                    assert g.has_edge(u, v)
                    assert min(deg[u], deg[v]) <= t
                    assert deg[draw.anchor] <= t
                    assert draw.anchor_degree == deg[draw.anchor]
                    assert {draw.anchor, draw.other} == {u, v}

    def test_isolated_vertices_never_return(self):
        g = Graph.from_edges(5, [(0, 1)])
        for draw in sample_edges(QueryOracle(g, seed=3), 1, 40, timeout_attempts=100):
            assert draw.timed_out or draw.edge == (0, 1)

    def test_rejects_bad_arguments(self, k3):
        with pytest.raises(ValueError):
            sample_edge(QueryOracle(k3), 0, 10)
        with pytest.raises(ValueError):
            sample_edge(QueryOracle(k3), 2, 0)

    def test_mean_attempts(self):
        g = random_graph(20, 0.2, seed=3)
        t = g.max_degree
        draws = sample_edges(QueryOracle(g, seed=5), t, 2000)
        mean = sum(d.attempts for d in draws) / len(draws)
        assert mean <= 2 * t / g.avg_degree * 1.2


class TestSamplerDistribution:
    """Exact and empirical edge distributions."""

    def test_k3_exact(self, k3):
        dist = sampler_edge_distribution(k3, 2)
        assert dist == {(0, 1): Fraction(1, 3), (0, 2): Fraction(1, 3), (1, 2): Fraction(1, 3)}

    def test_star_exact(self, star5):
        dist = sampler_edge_distribution(star5, 3)
        assert set(dist.values()) == {Fraction(1, 18)}
        conditional = sampler_edge_distribution(star5, 3, conditional=True)
        assert set(conditional.values()) == {Fraction(1, 5)}

    def test_light_light_edges_are_twice_as_likely(self, star_matching):
        conditional = sampler_edge_distribution(star_matching, 3, conditional=True)
        assert conditional[(0, 1)] == Fraction(1, 9)
        assert conditional[(6, 7)] == Fraction(2, 9)
        assert max(conditional.values()) / min(conditional.values()) == 2

    def test_ratio_at_most_two(self, small_corpus):
        for g in small_corpus:
            for t in range(1, g.max_degree + 1):
                dist = sampler_edge_distribution(g, t, conditional=True)
                if dist:
                    assert max(dist.values()) / min(dist.values()) <= 2
                    assert sum(dist.values()) == 1

    def test_empirical_frequencies(self, star_matching):
        samples = 4000
        draws = sample_edges(QueryOracle(star_matching, seed=12), 3, samples)
        hits = Counter(d.edge for d in draws if not d.timed_out)
        drawn = sum(hits.values())
        exact = sampler_edge_distribution(star_matching, 3, conditional=True)
        for edge, p in exact.items():
            p = float(p)
            assert abs(hits[edge] / drawn - p) <= 4 * binomial_sigma(p, drawn)
