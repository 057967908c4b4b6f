"""Tests for QueryOracle and QueryLedger."""
import numpy as np
import pytest

from tritest.errors import QueryContractError
from tritest.graph.oracle import QueryLedger, QueryOracle


@pytest.fixture
def oracle(k3):
    return QueryOracle(k3, seed=7)


class TestQueryOracle:
    """Tests for the three query types and their accounting."""

    def test_degree_query(self, oracle):
        assert oracle.degree_query(0) == 2
        assert oracle.ledger.degree_queries == 1
        assert oracle.ledger.total == 1

    def test_neighbor_query_is_one_based_and_sorted(self, oracle):
        assert oracle.neighbor_query(2, 1) == 0
        assert oracle.neighbor_query(2, 2) == 1
        assert oracle.ledger.neighbor_queries == 2

    def test_pair_query(self, path3):
        oracle = QueryOracle(path3)
        assert oracle.pair_query(0, 1)
        assert not oracle.pair_query(0, 2)
        assert oracle.ledger.pair_queries == 2

    @pytest.mark.parametrize("call", [
        lambda o: o.degree_query(3),
        lambda o: o.degree_query(-1),
        lambda o: o.neighbor_query(0, 0),
        lambda o: o.neighbor_query(0, 3),
        lambda o: o.pair_query(1, 1),
        lambda o: o.pair_query(0, 5),
    ])
    def test_contract_violations_are_not_counted(self, oracle, call):
        with pytest.raises(QueryContractError):
            call(oracle)
        assert oracle.ledger.total == 0

    def test_has_jth_neighbor(self, star5):
        oracle = QueryOracle(star5)
        assert oracle.has_jth_neighbor(1, 1) == 0
        assert oracle.has_jth_neighbor(1, 2) is None
        assert oracle.ledger.as_dict() == {'degree': 2, 'neighbor': 1, 'pair': 0, 'total': 3}

    def test_jth_neighbor_skips_heavy_vertices(self, star5):
        oracle = QueryOracle(star5)
        assert oracle.jth_neighbor(0, 2, max_degree=3) == (5, None)
        assert oracle.ledger.as_dict() == {'degree': 1, 'neighbor': 0, 'pair': 0, 'total': 1}
        assert oracle.jth_neighbor(0, 2) == (5, 2)
        assert oracle.jth_neighbor(2, 1, max_degree=3) == (1, 0)
        assert oracle.ledger.as_dict() == {'degree': 3, 'neighbor': 2, 'pair': 0, 'total': 5}

    def test_metadata(self, oracle):
        assert (oracle.n, oracle.m) == (3, 3)
        assert oracle.avg_degree == pytest.approx(2.0)
        assert oracle.edge_density == pytest.approx(1.0)
        assert oracle.seed == 7

    def test_reseed_replays_stream(self, oracle):
        first = oracle.rng.integers(1000, size=5)
        oracle.reseed(7)
        assert np.array_equal(oracle.rng.integers(1000, size=5), first)

    def test_batches_match_scalar_queries(self, small_corpus):
        graph = small_corpus[-1]
        batch = QueryOracle(graph)
        scalar = QueryOracle(graph)
        vertices = np.array([v for v in range(graph.n) if graph.degree(v) > 0])
        degrees = batch.degree_batch(vertices)
        assert degrees.tolist() == [scalar.degree_query(int(v)) for v in vertices]

        picks = np.ones_like(vertices)
        neighbors = batch.neighbor_batch(vertices, picks)
        assert neighbors.tolist() == [scalar.neighbor_query(int(v), 1) for v in vertices]
        assert batch.ledger == scalar.ledger

    def test_batch_contract(self, oracle):
        with pytest.raises(QueryContractError):
            oracle.neighbor_batch(np.array([0, 1]), np.array([1, 3]))
        with pytest.raises(QueryContractError):
            oracle.degree_batch(np.array([0, 3]))
        assert oracle.ledger.total == 0


class TestQueryLedger:
    """Tests for ledger arithmetic."""

    def test_add_and_subtract(self):
        a = QueryLedger(3, 2, 1)
        b = QueryLedger(1, 1, 0)
        assert a + b == QueryLedger(4, 3, 1)
        assert a - b == QueryLedger(2, 1, 1)
        assert (a + b).total == 9

    def test_snapshot_is_independent(self):
        ledger = QueryLedger(1, 0, 0)
        snap = ledger.snapshot()
        ledger.degree_queries += 5
        assert snap.degree_queries == 1
        assert ledger - snap == QueryLedger(5, 0, 0)
