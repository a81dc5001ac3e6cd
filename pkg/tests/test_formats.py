import networkx as nx
import pytest
from hypothesis import given

from conftest import corpus, graphs
from degseq.formats import (
    FormatError,
    emit_graph,
    from_edgelist,
    from_graph6,
    parse_graph,
    sniff_format,
    to_dot,
    to_graph6,
)
from degseq.graph_core import GraphError, build_graph
from degseq.transform import FIXTURE_NAMES, cycle, fixture, path


def _nx_graph6(g):
    ng = nx.Graph()
    ng.add_nodes_from(range(g.order))
    ng.add_edges_from(g.edges())
    return nx.to_graph6_bytes(ng, header=False).decode().strip()


def test_p5_graph6():
    assert to_graph6(path(5)) == _nx_graph6(path(5)) == "DhC"
    assert from_graph6("DhC") == path(5)
    assert from_graph6(">>graph6<<DhC\n") == path(5)


def test_single_vertex_graph6():
    assert to_graph6(build_graph(1, [])) == "@"
    assert to_graph6(build_graph(0, [])) == "?"


@given(graphs(max_order=12))
def test_graph6_matches_networkx(g):
    code = to_graph6(g)
    assert code == _nx_graph6(g)
    assert from_graph6(code) == g


def test_graph6_large_size_prefix():
    g = cycle(70)
    code = to_graph6(g)
    assert code.startswith("~") and code == _nx_graph6(g)
    assert from_graph6(code) == g


@pytest.mark.parametrize("bad", ["", "D", "DhC?", "Dh", "D\x7f\x7f\x7f", "Dh@"])
def test_graph6_malformed(bad):
    with pytest.raises(FormatError):
        from_graph6(bad)


def test_edgelist():
    g = from_edgelist("5\n0 1\n1 2\n2 3\n3 4\n")
    assert g == path(5)
    assert from_edgelist("# comment\n3\n0 1  # edge\n") == build_graph(3, [(0, 1)])
    with pytest.raises(FormatError):
        from_edgelist("2\n0 0")
    with pytest.raises(FormatError):
        from_edgelist("2\n0 5")
    with pytest.raises(FormatError):
        from_edgelist("two\n0 1")
    with pytest.raises(FormatError):
        from_edgelist("3\n0 1 2")


def test_dot():
    text = to_dot(path(5))
    assert text.startswith("graph G {")
    assert text.count("--") == 4
    assert 'label="2 (deg 2)"' in to_dot(path(5), degrees=True)


def test_sniff_and_parse():
    assert sniff_format("DhC\n") == "graph6"
    assert sniff_format("5\n0 1\n") == "edgelist"
    assert parse_graph("DhC") == parse_graph("5\n0 1\n1 2\n2 3\n3 4")
    with pytest.raises(FormatError):
        parse_graph("DhC\nDhC\n", "graph6")
    with pytest.raises(FormatError):
        parse_graph("DhC", "sparse6")


def _fixture_set():
    out = [fixture(n) for n in ("cube", "icosahedron", "dodecahedron", "petersen", "prism")]
    out += [fixture("cycle", 7), fixture("path", 6), fixture("complete", 6),
            fixture("complete_bipartite", 3, 4), fixture("clique_union", (3, 4))]
    return out


def test_round_trip_fixtures_and_corpus():
    assert set(FIXTURE_NAMES) >= {"cube", "petersen", "clique_union"}
    for g in _fixture_set() + [g for _, g in corpus(9)]:
        for fmt in ("graph6", "edgelist"):
            text = emit_graph(g, fmt)
            assert parse_graph(text, fmt) == g
            assert emit_graph(parse_graph(text), fmt) == text


def test_emit_unknown():
    with pytest.raises(FormatError):
        emit_graph(path(3), "gml")


def test_format_error_is_value_error():
    assert issubclass(FormatError, ValueError) and issubclass(GraphError, ValueError)
