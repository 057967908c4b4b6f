"""Tests for Graph and GraphParams."""
import numpy as np
import pytest

from tests.graphs import complete_bipartite, cycle
from tritest.errors import GraphFormatError
from tritest.graph.core import Graph, GraphParams


class TestGraph:
    """Tests for CSR construction and accessors."""

    def test_triangle_has_sorted_neighbors(self, k3):
        assert k3.n == 3
        assert k3.m == 3
        assert [k3.neighbors(v).tolist() for v in range(3)] == [[1, 2], [0, 2], [0, 1]]
        assert k3.avg_degree == pytest.approx(2.0)
        assert k3.edge_density == pytest.approx(1.0)

    def test_edge_orientation_is_irrelevant(self):
        a = Graph.from_edges(4, [(2, 0), (3, 1), (1, 0)])
        b = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3)])
        assert a == b
        assert list(a.edges()) == [(0, 1), (0, 2), (1, 3)]

    def test_isolated_vertices(self):
        g = Graph.from_edges(5, [(0, 1)])
        assert g.degrees().tolist() == [1, 1, 0, 0, 0]
        assert g.neighbors(4).size == 0
        assert g.max_degree == 1

    def test_has_edge(self, path3):
        assert path3.has_edge(0, 1)
        assert path3.has_edge(1, 0)
        assert not path3.has_edge(0, 2)

    def test_rejects_self_loop(self):
        with pytest.raises(GraphFormatError, match="self-loop"):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(GraphFormatError, match="repeated"):
            Graph.from_edges(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphFormatError):
            Graph.from_edges(3, [(0, 3)])

    def test_arrays_are_read_only(self, k3):
        with pytest.raises(ValueError):
            k3.indices[0] = 2

    def test_check_invariants_clean(self, small_corpus):
        for graph in small_corpus:
            assert graph.check_invariants() == []

    def test_check_invariants_detects_asymmetry(self):
        # 0 lists 1 but 1 lists 2
        g = Graph(np.array([0, 1, 2, 2]), np.array([1, 2]))
        assert "adjacency is not symmetric" in g.check_invariants()

    def test_empty_graph(self):
        g = Graph.empty(4)
        assert (g.n, g.m) == (4, 0)
        assert g.edge_array().shape == (0, 2)
        assert g.adjacency() == [[], [], [], []]

    def test_with_isolated(self, k3):
        padded = k3.with_isolated(10)
        assert (padded.n, padded.m) == (10, 3)
        assert padded.degree(9) == 0
        with pytest.raises(ValueError):
            k3.with_isolated(2)

    def test_relabel(self, path3):
        g = path3.relabel([2, 0, 1])
        assert list(g.edges()) == [(0, 1), (0, 2)]
        with pytest.raises(ValueError):
            path3.relabel([0, 0, 1])

    def test_disjoint_union(self, k3):
        g = Graph.disjoint_union(k3, complete_bipartite(1, 2), Graph.empty(2))
        assert (g.n, g.m) == (8, 5)
        assert g.has_edge(3, 4) and g.has_edge(3, 5)
        assert g.degree(7) == 0

    def test_edge_array_matches_edges(self):
        g = cycle(6)
        assert [tuple(e) for e in g.edge_array().tolist()] == list(g.edges())


class TestGraphParams:
    """Tests for the (n, m, eps) input record."""

    def test_of_graph(self, k3):
        params = GraphParams.of(k3, 0.5)
        assert (params.n, params.m, params.eps) == (3, 3, 0.5)
        assert params.avg_degree == pytest.approx(2.0)

    @pytest.mark.parametrize("n,m,eps", [(0, 0, 0.5), (3, -1, 0.5), (3, 3, 0.0), (3, 3, 1.5)])
    def test_invalid(self, n, m, eps):
        with pytest.raises(ValueError):
            GraphParams(n, m, eps)
