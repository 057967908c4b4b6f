"""Graph storage, file I/O and oracle access."""
from .core import Graph, GraphParams
from .loaders import load_graph, save_graph, validate_graph_file
from .oracle import QueryLedger, QueryOracle
from .subgraph import OrientedEdge, ThresholdClass, build_h, classify, edges_of_h, orient
