import time

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import class_members, graphs
from degseq.graph_core import DegreeMultiset, build_graph, complement, degree_sequence, is_clique_union
from degseq.recognize import (
    COMPLEMENT_CLASS,
    G_CLASS,
    NEITHER,
    Membership,
    classify,
    is_member_complement,
    is_member_G,
    required_degrees,
    signature_from_degrees,
)
from degseq.transform import clique_union, complete_bipartite, cycle, fixture, path


def _dm(d):
    return DegreeMultiset(tuple(sorted(d.items())))


def test_signature_examples():
    assert signature_from_degrees(_dm({1: 2, 2: 3})) == (2, 3)
    assert signature_from_degrees(_dm({3: 8})) == (4, 4)
    assert signature_from_degrees(_dm({1: 3})) is None


def test_member_G_examples():
    assert is_member_G(path(5), (2, 3))
    assert is_member_G(path(5), (3, 2))
    assert not is_member_G(clique_union((3, 4)), (3, 4))
    assert is_member_G(fixture("cube"), (4, 4))
    assert is_member_G(fixture("icosahedron"), (6, 6))


def test_member_complement_examples():
    prism = complement(cycle(6))
    assert is_member_complement(prism, 3, 3)
    assert not is_member_complement(complete_bipartite(3, 3), 3, 3)
    star = complete_bipartite(1, 3)
    assert not any(is_member_complement(star, m, n) for m in range(1, 5) for n in range(1, 5))


def test_classify_examples():
    assert classify(path(5)) == Membership(G_CLASS, (2, 3))
    assert classify(complement(cycle(6))) == Membership(COMPLEMENT_CLASS, (3, 3))
    assert classify(cycle(4)).kind == NEITHER
    base = classify(clique_union((3, 4)))
    assert base.kind == NEITHER and base.excluded_as_base and base.signature is None
    kmn = classify(complete_bipartite(3, 4))
    assert kmn.kind == NEITHER and kmn.excluded_as_base


def test_membership_validation():
    with pytest.raises(ValueError):
        Membership(G_CLASS, None)
    with pytest.raises(ValueError):
        Membership(NEITHER, (2, 3))


def test_C6_is_G33_member():
    # all three of C6, K3+K3 and the prism have degree multiset {2:6} or {3:6}
    assert is_member_G(cycle(6), (3, 3))
    assert classify(cycle(6)) == Membership(G_CLASS, (3, 3))


@given(st.lists(st.integers(2, 6), min_size=1, max_size=4))
def test_signature_round_trip(parts):
    sig = tuple(sorted(parts))
    assert signature_from_degrees(required_degrees(sig)) == sig


@given(graphs())
def test_member_G_implies_degree_signature(g):
    sig = signature_from_degrees(degree_sequence(g))
    if sig is None:
        return
    assert is_member_G(g, sig) == (is_clique_union(g) != sig)


@given(graphs(max_order=8))
def test_classify_consistent_with_predicates(g):
    mem = classify(g)
    if mem.kind == G_CLASS:
        assert is_member_G(g, mem.signature)
    elif mem.kind == COMPLEMENT_CLASS:
        assert is_member_complement(g, *mem.signature)
        assert is_member_G(complement(g), mem.signature)


@pytest.mark.parametrize("sig", [(3, 4), (4, 5), (3, 6)])
def test_enumerated_members_recognized(sig):
    for g in class_members(*sig):
        assert is_member_G(g, sig)
        assert classify(g) == Membership(G_CLASS, sig)
        assert classify(complement(g)) == Membership(COMPLEMENT_CLASS, sig)


def test_linear_recognition_smoke():
    # a large cycle plus a matching ring keeps degrees 2 and 3 at order 10^5
    n = 100_000
    g = build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    t = time.perf_counter()
    assert not is_member_G(g, (3, 3))
    classify(g)
    assert time.perf_counter() - t < 5.0
