import networkx as nx
import pytest

from uniharary.enumeration import enumerate_unicyclic
from uniharary.formats import (
    EdgeCountError,
    EdgeListHeaderError,
    FormatError,
    Graph6CharError,
    Graph6LengthError,
    Graph6PaddingError,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    parse_graphs,
)
from uniharary.graph import VertexRangeError, build_graph, cycle_path, make_cycle

K1 = build_graph(1, [])
K3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])


def nx_graph6(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def test_small_examples_match_networkx():
    assert emit_graph6(K1) == "@" == nx_graph6(K1)
    assert emit_graph6(K3) == "Bw" == nx_graph6(K3)
    assert emit_graph6(parse_graph6("Bw")) == "Bw"


def test_header_is_stripped():
    assert parse_graph6(">>graph6<<Bw") == K3


@pytest.mark.parametrize("n", range(3, 9))
def test_round_trip_and_networkx_agreement(n):
    for g in enumerate_unicyclic(n):
        s = emit_graph6(g)
        assert parse_graph6(s) == g
        assert s == nx_graph6(g)
        assert all(63 <= ord(ch) <= 126 for ch in s)


def test_parse_errors_are_distinct():
    with pytest.raises(Graph6CharError):
        parse_graph6("B!")
    with pytest.raises(Graph6LengthError):
        parse_graph6("")
    with pytest.raises(Graph6LengthError):
        parse_graph6("Bww")
    with pytest.raises(Graph6LengthError):
        parse_graph6("~??~")
    # K_3 needs 3 bits; the low three bits of the data byte are padding
    with pytest.raises(Graph6PaddingError):
        parse_graph6("Bx")


def test_emit_rejects_large_n():
    with pytest.raises(FormatError):
        emit_graph6(build_graph(63, []))


def test_edge_list_examples():
    assert parse_edge_list("3 3\n0 1\n1 2\n0 2") == K3
    assert parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0") == make_cycle(4)
    assert parse_edge_list("  3 3 \n\n0   1\n1 2\n 0 2\n") == K3


def test_edge_list_errors_are_distinct():
    with pytest.raises(EdgeCountError):
        parse_edge_list("3 2\n0 1")
    with pytest.raises(EdgeListHeaderError):
        parse_edge_list("3\n0 1")
    with pytest.raises(EdgeListHeaderError):
        parse_edge_list("x 1\n0 1")
    with pytest.raises(VertexRangeError):
        parse_edge_list("2 1\n0 5")
    with pytest.raises(FormatError):
        parse_edge_list("2 1\n0 a")


def test_edge_list_round_trip():
    g = cycle_path(4, 3)
    assert parse_edge_list(emit_edge_list(g)) == g
    assert emit_edge_list(K3) == "3 3\n0 1\n0 2\n1 2\n"


def test_sniffing():
    assert parse_graphs("3 3\n0 1\n1 2\n0 2\n") == [K3]
    assert parse_graphs("Bw\n@\n") == [K3, K1]
    with pytest.raises(Graph6LengthError):
        parse_graphs("\n\n")
