"""Shared graphs for the test suite."""
from pathlib import Path

import pytest

from tests.graphs import complete_bipartite, complete_graph, cycle, random_graph
from tritest.graph.core import Graph

DATA_DIR = Path(__file__).resolve().parent.parent / 'data'


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def path3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def star5():
    """K_{1,5} with centre 0."""
    return Graph.from_edges(6, [(0, i) for i in range(1, 6)])


@pytest.fixture
def star_matching():
    """K_{1,5} plus two disjoint edges: light-heavy and light-light edges at t=3."""
    return Graph.from_edges(10, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (6, 7), (8, 9)])


@pytest.fixture
def small_corpus():
    """Mixed desk-scale graphs with at least one edge."""
    return [
        complete_graph(3),
        complete_graph(4),
        complete_graph(5),
        cycle(5),
        cycle(6),
        complete_bipartite(3, 3),
        complete_bipartite(2, 5),
        Graph.from_edges(6, [(0, i) for i in range(1, 6)]),
        Graph.from_edges(10, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (6, 7), (8, 9)]),
        random_graph(12, 0.3, seed=1),
        random_graph(15, 0.4, seed=2),
        random_graph(20, 0.2, seed=3),
    ]


@pytest.fixture
def samples_dir():
    return DATA_DIR / 'samples'
