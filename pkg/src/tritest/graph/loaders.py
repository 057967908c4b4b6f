"""Edge-list file I/O for graphs."""
from pathlib import Path

from tritest.errors import GraphFormatError
from tritest.graph.core import Graph


def _parse_pair(line: str, lineno: int, what: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"expected two integers for {what}, got {line.strip()!r}", lineno)
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"non-integer {what}: {line.strip()!r}", lineno) from None
    if not (parts[0].isdigit() and parts[1].isdigit()):
        raise GraphFormatError(f"{what} must be non-negative decimal integers", lineno)
    return a, b


def load_graph(file_path: str | Path) -> Graph:
    """
    Load a graph from an edge-list file.

    The format is a header line ``n m`` followed by m lines ``u v`` with
    ``u < v``, ASCII decimal. Whitespace-only lines are ignored.

    Args:
        file_path: Path to the edge-list file

    Returns:
        Graph with ascending neighbour lists

    Raises:
        GraphFormatError: naming the offending line for malformed lines,
            self-loops, repeated edges or an edge count that disagrees with the header

    Example:
        >>> g = load_graph('data/samples/k3.txt')
        >>> g.n, g.m
        (3, 3)
    """
    raw = Path(file_path).read_bytes()
    try:
        lines = raw.decode('ascii').splitlines()
    except UnicodeDecodeError as e:
        raise GraphFormatError(f"non-ASCII byte 0x{raw[e.start]:02x}", raw.count(b'\n', 0, e.start) + 1) from e

    numbered = [(i + 1, line) for i, line in enumerate(lines) if line.strip()]
    if not numbered:
        raise GraphFormatError("missing 'n m' header", 1)

    header_no, header = numbered[0]
    n, m = _parse_pair(header, header_no, "header 'n m'")
    if n < 1:
        raise GraphFormatError("a graph needs at least one vertex", header_no)

    edges = []
    seen = {}
    for lineno, line in numbered[1:]:
        u, v = _parse_pair(line, lineno, "edge 'u v'")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if u > v:
            raise GraphFormatError(f"edge endpoints must be ascending, got {u} {v}", lineno)
        if v >= n:
            raise GraphFormatError(f"vertex {v} outside 0..{n - 1}", lineno)
        if (u, v) in seen:
            raise GraphFormatError(f"edge {u} {v} repeats line {seen[(u, v)]}", lineno)
        seen[(u, v)] = lineno
        edges.append((u, v))

    if len(edges) != m:
        last = numbered[-1][0]
        raise GraphFormatError(f"header announces {m} edges but {len(edges)} were listed", last)

    return Graph.from_edges(n, edges)


def save_graph(graph: Graph, file_path: str | Path) -> None:
    """
    Write a graph in the edge-list format read by load_graph.

    Args:
        graph: Graph to write
        file_path: Destination path (parent directories are created)
    """
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    rows = [f"{graph.n} {graph.m}"]
    rows.extend(f"{u} {v}" for u, v in graph.edges())
    with open(path, 'w', encoding='ascii', newline='\n') as f:
        f.write("\n".join(rows) + "\n")


def validate_graph_file(file_path: str | Path) -> list[str]:
    """
    Validate an edge-list file.

    Args:
        file_path: Path to the edge-list file

    Returns:
        Problems found; empty when the file holds a valid simple graph
    """
    try:
        graph = load_graph(file_path)
    except GraphFormatError as e:
        return [str(e)]
    return graph.check_invariants()
