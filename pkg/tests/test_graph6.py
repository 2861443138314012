import networkx as nx
import pytest
from hypothesis import given, strategies as st

import naive
from conftest import graphs
from turanlab.core import SimpleGraph
from turanlab.graph6 import (
    Graph6Error,
    graph6_decode,
    graph6_encode,
    read_graph6_file,
    write_graph6_file,
)


def _nx_encode(g: SimpleGraph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def test_known_strings():
    assert graph6_encode(naive.complete_graph(3)) == "Bw"
    assert graph6_encode(naive.cycle_graph(5)) == "Dhc"
    assert graph6_encode(SimpleGraph(0)) == "?"
    assert graph6_decode("Bw") == naive.complete_graph(3)


@given(graphs(max_n=12))
def test_roundtrip(g):
    assert graph6_decode(graph6_encode(g)) == g


@given(graphs(max_n=12))
def test_matches_networkx(g):
    assert graph6_encode(g) == _nx_encode(g)


@given(st.integers(min_value=60, max_value=70))
def test_multibyte_size_boundary(n):
    # n = 63 is the first size that needs the long form
    g = SimpleGraph.from_edges(n, [(0, n - 1), (1, 2)])
    text = graph6_encode(g)
    assert (text[0] == "~") == (n > 62)
    assert graph6_decode(text) == g
    assert text == _nx_encode(g)


def test_header_is_accepted():
    g = naive.cycle_graph(5)
    assert graph6_decode(">>graph6<<" + graph6_encode(g)) == g


def _kind(text):
    with pytest.raises(Graph6Error) as e:
        graph6_decode(text)
    return e.value.kind


def test_decode_error_kinds():
    assert _kind("") == "malformed-header"
    assert _kind("Bw+") == "bad-character"
    assert _kind("B") == "truncated"          # body byte missing
    assert _kind("Bww") == "trailing-garbage"
    assert _kind(">>graph6<") == "malformed-header"
    # n = 3 with a nonzero padding bit below the 3 adjacency bits
    assert _kind("B" + chr(63 + 0b110001)) == "trailing-garbage"
    # long form claiming n > 65536
    too_big = "~" + "".join(chr(63 + ((1 << 17) >> s & 63)) for s in (12, 6, 0))
    assert _kind(too_big) == "too-large"


def test_file_roundtrip(tmp_path):
    gs = [naive.cycle_graph(4), SimpleGraph(1), naive.complete_graph(5)]
    path = tmp_path / "batch.g6"
    write_graph6_file(path, gs)
    assert read_graph6_file(path) == gs


def test_file_errors_carry_line_numbers(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("Bw\nB\n")
    with pytest.raises(Graph6Error) as e:
        read_graph6_file(path)
    assert "2" in str(e.value)


def test_blank_lines_in_files(tmp_path):
    path = tmp_path / "gaps.g6"
    path.write_text("Bw\n\nDhc\n")
    gs = read_graph6_file(path)
    assert [g.n for g in gs] == [3, 5]
