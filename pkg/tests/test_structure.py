import networkx as nx
import pytest
from hypothesis import given

from conftest import class_members, corpus, graphs
from degseq.graph_core import build_graph, complement
from degseq.structure import (
    PROP3_CASES,
    UNBOUNDED,
    BipartiteCase,
    TheoremViolation,
    bipartite_case,
    bipartition,
    block_decomposition,
    diameter,
    distance_matrix,
    eccentricities,
    is_connected,
    prop3_case,
)
from degseq.transform import clique_union, complete, complete_bipartite, cycle, fixture, path, pendant_family, twin_bridge_case1
import oracles


def test_connected_examples():
    assert is_connected(path(5))
    assert not is_connected(clique_union((3, 4)))
    assert all(is_connected(g) for g in class_members(3, 4))


def test_blocks_examples():
    assert block_decomposition(path(5)).counts == (3, 4)
    assert block_decomposition(fixture("cube")).counts == (0, 0)
    assert block_decomposition(pendant_family(4)).counts == (2, 2)


@given(graphs(max_order=10))
def test_blocks_match_deletion_oracle(g):
    dec = block_decomposition(g)
    assert set(dec.cut_vertices) == oracles.cut_vertices(g)
    assert set(dec.bridges) == oracles.bridges(g)


@given(graphs(max_order=10))
def test_blocks_match_networkx(g):
    ng = nx.Graph()
    ng.add_nodes_from(range(g.order))
    ng.add_edges_from(g.edges())
    dec = block_decomposition(g)
    expect = sorted(sorted(c) for c in nx.biconnected_components(ng))
    got = sorted(sorted(b) for b in dec.blocks if len(b) >= 2)
    assert got == expect


def test_prop3_examples():
    assert prop3_case(path(5)) == 5
    assert prop3_case(twin_bridge_case1(4, 6)) == 1
    assert any(prop3_case(g) == 2 for g in class_members(3, 5))


def test_prop3_violation_is_falsy():
    res = prop3_case(build_graph(7, [(i, i + 1) for i in range(6)]))
    assert isinstance(res, TheoremViolation) and not res


def test_prop3_cases_cover_corpus():
    seen = set()
    for _, g in corpus(10):
        case = prop3_case(g)
        assert case in PROP3_CASES.values()
        seen.add(case)
    assert seen == {1, 2, 3, 4, 5}


def test_diameter_examples():
    assert diameter(complete(6)) == 1
    assert diameter(path(5)) == 4
    assert any(diameter(g) == 2 for g in class_members(3, 4))
    assert diameter(clique_union((2, 3))) is UNBOUNDED
    assert eccentricities(path(3)) == [2, 1, 2]


@given(graphs(max_order=9))
def test_diameter_matches_floyd(g):
    assert diameter(g) == oracles.diameter(g)
    dm = distance_matrix(g)
    assert all(dm[i][i] == 0 for i in range(g.order))


def test_bipartition_examples():
    bp = bipartition(cycle(6))
    assert bp.is_bipartite and tuple(map(len, bp.parts)) == (3, 3)
    c5 = bipartition(cycle(5))
    assert not c5.is_bipartite and len(c5.odd_cycle) == 5
    pr = bipartition(complement(cycle(6)))
    assert not pr.is_bipartite and len(pr.odd_cycle) == 3


@given(graphs(max_order=10))
def test_bipartition_certificates(g):
    bp = bipartition(g)
    if bp.is_bipartite:
        a, b = bp.parts
        assert len(a) <= len(b) and sorted(a + b) == list(range(g.order))
        assert all(not g.has_edge(x, y) for side in (a, b) for x in side for y in side)
    else:
        cyc = bp.odd_cycle
        assert len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc)
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def test_bipartite_case_examples():
    cube = fixture("cube")
    assert bipartite_case(cube, bipartition(cube).parts, (4, 4)).label == 3
    p5 = path(5)
    res = bipartite_case(p5, bipartition(p5).parts, (2, 3))
    assert res == BipartiteCase(2, ((1, 3), (0, 2, 4)))
    found = []
    for g in class_members(4, 6):
        bp = bipartition(g)
        if bp.is_bipartite and len(bp.parts[0]) == len(bp.parts[1]):
            found.append(bipartite_case(g, bp.parts, (4, 6)).label)
    assert found and set(found) == {1}


def test_bipartite_case_violation():
    g = complete_bipartite(2, 4)
    res = bipartite_case(g, bipartition(g).parts, (3, 3))
    assert isinstance(res, TheoremViolation)
