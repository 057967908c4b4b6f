"""Tests for edge-list file I/O."""
import pytest

from tritest.errors import GraphFormatError
from tritest.graph.core import Graph
from tritest.graph.loaders import load_graph, save_graph, validate_graph_file


def write(tmp_path, text):
    path = tmp_path / 'g.txt'
    path.write_text(text)
    return path


class TestLoadGraph:
    """Tests for load_graph and validate_graph_file."""

    def test_sample_k3(self, samples_dir):
        g = load_graph(samples_dir / 'k3.txt')
        assert (g.n, g.m) == (3, 3)
        assert g.neighbors(0).tolist() == [1, 2]

    def test_isolated_vertex(self, tmp_path):
        g = load_graph(write(tmp_path, "4 3\n0 1\n0 2\n1 2\n"))
        assert g.degree(3) == 0

    def test_blank_lines_are_skipped(self, tmp_path):
        g = load_graph(write(tmp_path, "3 2\n\n0 1\n   \n1 2\n"))
        assert g.m == 2

    def test_duplicate_edge_names_line(self, tmp_path):
        with pytest.raises(GraphFormatError, match="line 3") as info:
            load_graph(write(tmp_path, "3 2\n0 1\n0 1\n"))
        assert info.value.line == 3

    def test_self_loop(self, tmp_path):
        with pytest.raises(GraphFormatError, match="self-loop"):
            load_graph(write(tmp_path, "3 1\n1 1\n"))

    def test_descending_pair(self, tmp_path):
        with pytest.raises(GraphFormatError, match="ascending"):
            load_graph(write(tmp_path, "3 1\n2 1\n"))

    def test_out_of_range(self, tmp_path):
        with pytest.raises(GraphFormatError, match="outside"):
            load_graph(write(tmp_path, "3 1\n0 3\n"))

    def test_count_mismatch(self, tmp_path):
        with pytest.raises(GraphFormatError, match="announces 3 edges"):
            load_graph(write(tmp_path, "3 3\n0 1\n"))

    def test_malformed_line(self, tmp_path):
        with pytest.raises(GraphFormatError, match="line 2"):
            load_graph(write(tmp_path, "3 1\n0 x\n"))

    def test_non_ascii_byte_names_line(self, tmp_path):
        path = tmp_path / 'g.txt'
        path.write_bytes(b"3 2\n0 1\n1 2\xff\n")
        with pytest.raises(GraphFormatError, match="line 3: non-ASCII byte 0xff") as info:
            load_graph(path)
        assert info.value.line == 3
        assert validate_graph_file(path) == ["line 3: non-ASCII byte 0xff"]

    def test_validate_reports_problem(self, tmp_path):
        problems = validate_graph_file(write(tmp_path, "3 2\n0 1\n0 1\n"))
        assert len(problems) == 1
        assert "repeats" in problems[0]

    def test_validate_samples(self, samples_dir):
        for path in sorted(samples_dir.glob('*.txt')):
            assert validate_graph_file(path) == [], path.name


class TestSaveGraph:
    """Tests for save_graph."""

    def test_save_then_load(self, tmp_path, star_matching):
        path = tmp_path / 'nested' / 'g.txt'
        save_graph(star_matching, path)
        assert load_graph(path) == star_matching

    def test_exact_bytes(self, tmp_path, path3):
        path = tmp_path / 'p.txt'
        save_graph(path3, path)
        assert path.read_bytes() == b"3 2\n0 1\n1 2\n"

    def test_empty_edge_set(self, tmp_path):
        path = tmp_path / 'e.txt'
        save_graph(Graph.empty(2), path)
        assert path.read_text() == "2 0\n"
        assert load_graph(path).m == 0
