import json
import subprocess
import sys

import pytest

from degseq import reports
from degseq.cli import main
from degseq.formats import from_graph6
from degseq.graph_core import is_isomorphic
from degseq.recognize import is_member_G
from degseq.transform import path


@pytest.fixture
def p5(tmp_path):
    f = tmp_path / "p5.g6"
    f.write_text("DhC\n")
    return str(f)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_recognize(capsys, p5):
    code, out, _ = run(capsys, "recognize", p5)
    doc = json.loads(out)
    assert code == 0 and doc["membership"]["class"] == "G" and doc["membership"]["signature"] == [2, 3]
    reports.validate(doc)


def test_recognize_edgelist_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("5\n0 1\n1 2\n2 3\n3 4\n"))
    code, out, _ = run(capsys, "recognize", "-")
    assert code == 0 and json.loads(out)["membership"]["signature"] == [2, 3]


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--sig", "2,3")
    doc = json.loads(out)
    reports.validate(doc)
    assert code == 0 and doc["classes"] == 1
    assert is_isomorphic(from_graph6(doc["graphs"][0]), path(5))
    code, out, _ = run(capsys, "enumerate", "--sig", "2,2")
    assert code == 0 and json.loads(out)["classes"] == 0
    code, out, _ = run(capsys, "enumerate", "--sig", "4,5", "--max-classes", "7")
    doc = json.loads(out)
    assert doc["partial"] and doc["classes"] == 7


def test_enumerate_complement(capsys):
    code, out, _ = run(capsys, "enumerate", "--sig", "3,3", "--complement")
    g = from_graph6(json.loads(out)["graphs"][0])
    assert set(g.degrees) == {3}


def test_sample(capsys):
    code, out, _ = run(capsys, "sample", "--sig", "4,5", "--steps", "30", "--seed", "3")
    assert code == 0 and is_member_G(from_graph6(out), (4, 5))
    _, again, _ = run(capsys, "sample", "--sig", "4,5", "--steps", "30", "--seed", "3")
    assert again == out
    code, _, _ = run(capsys, "sample", "--sig", "2,2")
    assert code == 1


def test_certify(capsys, p5):
    code, out, _ = run(capsys, "certify", p5)
    doc = json.loads(out)
    reports.validate(doc)
    assert code == 0 and doc["prop3_case"] == 5 and doc["diameter"] == 4


def test_hunt(capsys):
    code, out, _ = run(capsys, "hunt", "diam4", "--sigs", "auto", "--max-order", "9", "--mode", "exhaustive")
    doc = json.loads(out)
    reports.validate(doc)
    assert code == 0 and doc["counterexamples"] == []
    code, out, _ = run(capsys, "hunt", "traceability", "--sigs", "2,3;3,4")
    assert code == 0 and json.loads(out)["graphs_tested"] == 11


def test_hunt_random_byte_identical(capsys):
    args = ["hunt", "traceability", "--sigs", "4,6", "--mode", "random", "--seed", "5", "--budget", "10"]
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b


def test_hunt_needs_max_order(capsys):
    code, _, err = run(capsys, "hunt", "diam4", "--sigs", "auto")
    assert code == 1 and "max-order" in err


def test_reduce(capsys, p5):
    code, out, _ = run(capsys, "reduce", p5)
    doc = json.loads(out)
    reports.validate(doc)
    assert code == 0 and doc["holds"] and doc["source_optimum"] == 3
    assert is_member_G(from_graph6(doc["product"]), (5, 5))


def test_convert(capsys, p5):
    code, out, _ = run(capsys, "convert", p5, "--to", "edgelist")
    assert code == 0 and out == "5\n0 1\n1 2\n2 3\n3 4\n"
    code, out, _ = run(capsys, "convert", p5, "--to", "dot")
    assert out.count("--") == 4


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys)[0] == 1
    assert run(capsys, "enumerate", "--sig", "x,y")[0] == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n0 0\n")
    assert run(capsys, "certify", str(bad))[0] == 2
    assert run(capsys, "recognize", str(tmp_path / "missing.g6"))[0] == 2
    k4 = tmp_path / "k4.txt"
    k4.write_text("4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    assert run(capsys, "reduce", str(k4))[0] == 2


def test_console_entry_point(p5):
    out = subprocess.run([sys.executable, "-m", "degseq.cli", "recognize", p5],
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out)["membership"]["class"] == "G"


def test_schema_rejects_bad_documents():
    import jsonschema
    with pytest.raises(jsonschema.ValidationError):
        reports.validate({"schema_version": 1, "kind": "membership"})
    with pytest.raises(jsonschema.ValidationError):
        reports.validate({"schema_version": 2, "kind": "membership",
                          "membership": {"class": "G", "signature": [2, 3], "excluded_as_base": False}})
