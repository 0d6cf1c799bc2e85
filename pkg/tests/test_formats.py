import json

import pytest

from lpa import formats
from lpa.errors import InputError, UnknownName
from lpa.report import Report, Verdict, combine
from strategies import ALGEBRAS

EX = ALGEBRAS["ex42"]


def test_combine_precedence():
    assert combine([]) == Verdict.PASS
    assert combine([Verdict.PASS, Verdict.UNKNOWN]) == Verdict.UNKNOWN
    assert combine([Verdict.UNKNOWN, Verdict.FAIL, Verdict.PASS]) == Verdict.FAIL


def test_report_exit_codes():
    rep = Report("x")
    rep.add("a", True)
    assert rep.finalize().exit_code == 0
    rep.add("b", Verdict.UNKNOWN)
    assert rep.finalize().exit_code == 2
    rep.add("c", False)
    assert rep.finalize().exit_code == 1
    assert rep.render().endswith("1/3 Pass -> Fail")


def test_witness_shift_defaults_to_degree():
    w = formats.witness_from_doc({"x": "e", "y": "e*"}, EX)
    assert w.shift == 1
    with pytest.raises(InputError):
        formats.witness_from_doc({"x": "e", "y": "e*", "shift": "one"}, EX)


def test_element_errors_carry_document_location():
    with pytest.raises(UnknownName) as exc:
        formats.efamily_from_doc({"vertices": {"u": "u", "v": "w"}, "edges": {}}, EX.graph, EX)
    assert "family.vertices.v" in str(exc.value)
    with pytest.raises(InputError) as exc:
        formats.efamily_from_doc({"vertices": {"u": "u"}}, EX.graph, EX)
    assert "missing key 'edges'" in str(exc.value)


def test_unknown_source_names():
    doc = {"vertices": {"u": "u", "v": "v", "q": "v"}, "edges": {}}
    with pytest.raises(InputError):
        formats.efamily_from_doc(doc, EX.graph, EX)


def test_read_json_errors(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{nope")
    with pytest.raises(InputError) as exc:
        formats.read_json(p)
    assert "line 1" in str(exc.value)
    p.write_text("[1]")
    with pytest.raises(InputError):
        formats.read_json(p)
    with pytest.raises(InputError):
        formats.read_json(tmp_path / "missing.json")


def test_certificate_doc_round_trip():
    doc = {"p": "u", "class": "2 t [u] + t [v]", "parts": [
        {"p": "e e*", "vertex": "u", "x": "e", "y": "e*"},
        {"p": "f f*", "vertex": "u", "x": "f", "y": "f*"},
        {"p": "g g*", "vertex": "v", "x": "g", "y": "g*"},
    ]}
    cert = formats.class_certificate_from_doc(json.loads(json.dumps(doc)), EX)
    assert [p.witness.shift for p in cert.parts] == [1, 1, 1]
    with pytest.raises(InputError):
        formats.class_certificate_from_doc({**doc, "parts": [{**doc["parts"][0], "vertex": "w"}]}, EX)


def test_conjugator_inverse_defaults_to_adjoint():
    z = formats.conjugator_from_doc({"z": "e f* + f e* + g g* + v"}, EX)
    assert z.z_inv == z.z.star()


def test_chain_and_matrix_docs():
    assert formats.matrix_from_doc([[1, 2]]).tolist() == [[1, 2]]
    steps = formats.chain_from_doc({"steps": [{"R": [[1]], "S": [[2]]}]})
    assert steps[0][1].tolist() == [[2]]
    with pytest.raises(InputError):
        formats.se_witness_from_doc({"R": [[1]], "S": [[1]], "lag": 1.5})
