"""Tests for the H(G, t) edge-count estimator."""
import math

import numpy as np
import pytest

from tests.graphs import complete_graph, random_graph
from tritest.algorithms.estimator import (
    EstimatorConfig,
    estimate_edges,
    repeat_estimates,
    sample_size,
)
from tritest.errors import UndefinedDensityError
from tritest.exact.distributions import estimator_expectation
from tritest.graph.core import Graph
from tritest.graph.oracle import QueryOracle
from tritest.graph.subgraph import edges_of_h
from tritest.utils.stats import standard_error


class TestSampleSize:
    """Tests for the closed-form sample size."""

    def test_closed_form_value(self):
        assert sample_size(1.0, 1, 10, 10, 2 / math.e ** 4) == 64

    def test_linear_in_threshold(self):
        assert sample_size(1.0, 2, 10, 10, 2 / math.e ** 4) == 128

    def test_quadratic_in_accuracy(self):
        assert sample_size(0.5, 1, 10, 10, 2 / math.e ** 4) == 256

    def test_density_is_m_over_n(self):
        base = sample_size(1.0, 1, 10, 10, 2 / math.e ** 4)
        assert sample_size(1.0, 1, 20, 10, 2 / math.e ** 4) == 2 * base

    def test_at_least_one(self):
        assert sample_size(1.0, 1, 1, 10 ** 9, 0.5) == 1

    def test_empty_graph_has_no_density(self):
        with pytest.raises(UndefinedDensityError):
            sample_size(0.5, 1, 10, 0, 0.1)

    @pytest.mark.parametrize('kwargs', [
        {'eps': 0.0}, {'eps': 1.5}, {'t': 0}, {'fail_prob': 0.0}, {'fail_prob': 1.0},
    ])
    def test_rejects_bad_inputs(self, kwargs):
        args = {'eps': 0.5, 't': 1, 'n': 10, 'm': 10, 'fail_prob': 0.1} | kwargs
        with pytest.raises(ValueError):
            sample_size(**args)

    def test_config_validates(self):
        with pytest.raises(UndefinedDensityError):
            EstimatorConfig(eps=0.5, t=1, fail_prob=0.1, n=5, m=0)
        assert EstimatorConfig(eps=1.0, t=1, fail_prob=2 / math.e ** 4, n=10, m=10).sample_size == 64


class TestExactExpectation:
    """The estimator's exact mean, from outcome enumeration, is m'."""

    def test_k3(self, k3):
        assert estimator_expectation(k3, 2) == 3
        assert estimator_expectation(k3, 1) == 0

    def test_star(self, star5):
        assert estimator_expectation(star5, 3) == 5

    def test_matches_edges_of_h(self, small_corpus):
        for g in small_corpus:
            for t in range(1, g.max_degree + 1):
                assert estimator_expectation(g, t) == edges_of_h(g, t), (g, t)

    def test_empty_graph(self):
        assert estimator_expectation(Graph.empty(4), 1) == 0


class TestEstimateEdges:
    """Tests for estimate_edges on a live oracle."""

    def _config(self, g, t, eps=0.5, fail_prob=0.1):
        return EstimatorConfig(eps=eps, t=t, fail_prob=fail_prob, n=g.n, m=g.m)

    def test_query_cost(self, small_corpus):
        for g in small_corpus:
            t = max(1, g.max_degree // 2)
            oracle = QueryOracle(g, seed=3)
            est = estimate_edges(oracle, self._config(g, t))
            r = est.samples_used
            assert est.queries_used.degree_queries <= 2 * r
            assert est.queries_used.neighbor_queries <= r
            assert est.queries_used.pair_queries == 0
            assert est.queries_used.total <= 4 * r
            assert est.queries_used == oracle.ledger

    def test_value_non_negative_and_bounded(self, small_corpus):
        for g in small_corpus:
            est = estimate_edges(QueryOracle(g, seed=5), self._config(g, 2))
            # each sample contributes at most n·t
            assert 0 <= est.value <= g.n * 2

    def test_all_heavy_estimates_zero(self, k4):
        est = estimate_edges(QueryOracle(k4, seed=0), self._config(k4, 2))
        assert est.value == 0
        assert est.queries_used.neighbor_queries == 0

    def test_isolated_vertices_contribute_nothing(self):
        g = Graph.from_edges(6, [(0, 1)])
        est = estimate_edges(QueryOracle(g, seed=9), self._config(g, 1))
        assert est.value >= 0
        assert est.queries_used.neighbor_queries <= est.samples_used

    def test_deterministic_for_a_seed(self, k4):
        first = estimate_edges(QueryOracle(k4, seed=11), self._config(k4, 3))
        second = estimate_edges(QueryOracle(k4, seed=11), self._config(k4, 3))
        assert first.value == second.value
        assert first.seed == 11

    def test_rejects_mismatched_config(self, k3, k4):
        with pytest.raises(ValueError, match="oracle has n=3"):
            estimate_edges(QueryOracle(k3), self._config(k4, 3))

    def test_unbiased(self, small_corpus):
        for g in small_corpus:
            for t in sorted({1, max(1, g.max_degree // 2), g.max_degree}):
                values = repeat_estimates(QueryOracle(g, seed=t), self._config(g, t), trials=40)
                expected = float(estimator_expectation(g, t))
                se = standard_error(values)
                assert abs(values.mean() - expected) <= 5 * se + 1e-9, (g, t)

    def test_accuracy_within_failure_budget(self):
        g = complete_graph(4)
        config = self._config(g, 3, eps=0.5, fail_prob=0.1)
        values = repeat_estimates(QueryOracle(g, seed=2024), config, trials=60)
        misses = np.count_nonzero(np.abs(values - 6) > 0.5 * 6)
        # fail_prob·trials plus three binomial standard deviations
        assert misses <= 0.1 * 60 + 3 * math.sqrt(60 * 0.1 * 0.9)

    @pytest.mark.slow
    def test_unbiased_over_many_runs(self):
        g = random_graph(40, 0.15, seed=8)
        t = max(1, g.max_degree // 2)
        config = EstimatorConfig(eps=1.0, t=t, fail_prob=0.5, n=g.n, m=g.m)
        values = repeat_estimates(QueryOracle(g, seed=1), config, trials=10_000)
        assert abs(values.mean() - edges_of_h(g, t)) <= 3 * standard_error(values)

    @pytest.mark.slow
    @pytest.mark.parametrize('index', range(12))
    def test_contract_on_small_graphs(self, small_corpus, index):
        g = small_corpus[index]
        eps, fail_prob, trials = 0.25, 0.1, 10_000
        # smallest threshold that keeps m' ≥ (1 - 2ε)m
        t = next(t for t in range(1, g.max_degree + 1) if edges_of_h(g, t) >= (1 - 2 * eps) * g.m)
        m_prime = edges_of_h(g, t)
        values = repeat_estimates(QueryOracle(g, seed=index), self._config(g, t, eps, fail_prob), trials)

        assert abs(values.mean() - m_prime) <= 3 * standard_error(values) + 1e-9
        misses = np.count_nonzero((values < (1 - eps) * m_prime) | (values > (1 + eps) * m_prime))
        assert misses / trials <= fail_prob + 3 * math.sqrt(fail_prob * (1 - fail_prob) / trials)
