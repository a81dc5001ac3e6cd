import json

import pytest

from conftest import complement_corpus
from degseq import reports
from degseq.formats import to_graph6
from degseq.graph_core import canonical_form, complement
from degseq.hunt import (
    DIAMETER4,
    EXHAUSTIVE,
    OPEN_QUESTION,
    RANDOM,
    THEOREM_VIOLATION,
    TRACEABILITY,
    Counterexample,
    HuntReport,
    PropertyReport,
    auto_signatures,
    certify,
    hunt_diameter4,
    hunt_traceability,
    recertify,
    run_campaign,
)
from degseq.transform import cycle, fixture, path, twin_bridge_case1


def test_certify_p5():
    r = certify(path(5))
    assert r.membership.kind == "G" and r.membership.signature == (2, 3)
    assert r.prop3_case == 5 and r.traceable and r.hamiltonian is False
    assert r.diameter == 4 and r.bipartite_case == 2 and not r.violations


def test_certify_cube():
    r = certify(fixture("cube"))
    assert r.membership.signature == (4, 4) and r.prop3_case == 1
    assert r.hamiltonian and r.bipartite_case == 3 and r.diameter == 3


def test_certify_prism():
    r = certify(fixture("prism"))
    assert r.membership.kind == "complement" and r.pancyclic
    assert not r.bipartite and r.diameter == 2 and not r.violations


def test_certify_out_of_range_fields_are_none():
    r = certify(cycle(30))
    assert r.hamiltonian is None and r.pancyclic is None and r.independence_number is None


def test_certify_disconnected_diameter_is_null():
    r = certify(fixture("clique_union", (3, 4)))
    assert r.diameter is None and r.membership.excluded_as_base


def test_property_report_round_trip():
    for g in (path(5), fixture("cube"), fixture("prism"), twin_bridge_case1(4, 5)):
        doc = certify(g).to_dict()
        reports.validate(doc)
        again = PropertyReport.from_dict(json.loads(json.dumps(doc)))
        assert again == certify(g)


def test_auto_signatures():
    sigs = auto_signatures(6)
    assert sigs == [(2, 3), (2, 4), (3, 3)]
    assert all(m >= 2 and (m, n) != (2, 2) and m + n <= 10 for m, n in auto_signatures(10))


def test_traceability_small():
    rep = hunt_traceability([(2, 3), (3, 3), (3, 4)])
    assert rep.counterexamples == [] and rep.graphs_tested == 12
    one = hunt_traceability([(2, 3)])
    assert one.graphs_tested == 1 and one.cells[0].complete


def test_diameter4_small():
    rep = hunt_diameter4(auto_signatures(9))
    assert rep.counterexamples == []
    for sig, g in complement_corpus(9):
        assert certify(g).diameter <= 4
    g33 = hunt_diameter4([(3, 3)])
    assert g33.graphs_tested == 1


def test_random_mode_deterministic():
    a = run_campaign(TRACEABILITY, [(4, 6), (5, 5)], RANDOM, budget=15, seed=42)
    b = run_campaign(TRACEABILITY, [(4, 6), (5, 5)], RANDOM, budget=15, seed=42)
    assert reports.dumps(a.to_dict()) == reports.dumps(b.to_dict())
    assert a.cells[0].graphs_tested > 1


def test_parallel_matches_serial():
    sigs = auto_signatures(8)
    a = run_campaign(DIAMETER4, sigs, EXHAUSTIVE, jobs=1)
    b = run_campaign(DIAMETER4, sigs, EXHAUSTIVE, jobs=2)
    assert a.to_dict() == b.to_dict()


def test_budget_marks_partial():
    rep = run_campaign(TRACEABILITY, [(4, 5)], EXHAUSTIVE, budget=20)
    assert not rep.cells[0].complete and rep.cells[0].reason == "max_classes"


def test_report_round_trip():
    rep = hunt_traceability([(2, 3), (3, 4)])
    doc = rep.to_dict()
    reports.validate(doc)
    assert HuntReport.from_dict(doc).to_dict() == doc


def test_recertify():
    g = complement(fixture("prism"))
    cx = Counterexample(canonical_form(g).hex(), to_graph6(g), [3, 3], "diameter 4", OPEN_QUESTION)
    assert not recertify(DIAMETER4, cx)
    bogus = Counterexample(cx.canonical, to_graph6(path(7)), [3, 4], "not traceable", OPEN_QUESTION)
    assert not recertify(TRACEABILITY, bogus)


def test_unknown_campaign():
    with pytest.raises(ValueError):
        run_campaign("girth", [(2, 3)])
    assert THEOREM_VIOLATION != OPEN_QUESTION
