"""Result documents: serialization, parsing, and field-level error reporting."""

import json
from fractions import Fraction

import pytest

from wbext.engine import solve_ext
from wbext.problems import ExtProblem
from wbext.qext import quad
from wbext.records import (
    OutputRecord,
    RecordError,
    parse_poly,
    parse_record,
    parse_scalar,
    poly_str,
    scalar_str,
)


def _record(problem):
    return OutputRecord.from_solution(problem, solve_ext(problem))


def test_scalar_round_trip():
    for x in (Fraction(3), Fraction(-7, 2), quad(2, -1, 19), quad(0, Fraction(1, 2), 5)):
        assert parse_scalar(scalar_str(x), "x") == x


def test_parse_scalar_rejects_floats_and_noise():
    for bad in ("0.5", "sqrt(4", "1 + ", "2**3", ""):
        with pytest.raises(RecordError) as err:
            parse_scalar(bad, "problem.delta")
        assert err.value.field == "problem.delta"


def test_poly_round_trip_with_quadratic_coefficients():
    text = "(2-sqrt(19))*d^3*l^4 + 1/2*l"
    assert poly_str(parse_poly(text, "f")) == text


def test_json_round_trip_rational():
    rec = _record(ExtProblem(shape=3, b=3, alpha=0, abar=0, delta=1, dbar=-4))
    again = parse_record(rec.to_json())
    assert again.to_json() == rec.to_json()
    assert again.ext_dim == 2
    assert again.problem == rec.problem


def test_json_round_trip_quadratic_weights():
    delta = quad(Fraction(7, 2), Fraction(1, 2), 19)
    rec = _record(
        ExtProblem(shape=3, b=None, sector="f", alpha=0, abar=0,
                   delta=delta, dbar=delta - 6)
    )
    again = parse_record(rec.to_json())
    assert again.problem.delta == delta
    assert again.to_json() == rec.to_json()


def test_table_and_json_encode_identical_data():
    rec = _record(ExtProblem(shape=2, b=3, alpha=1, gamma=-1, delta=1))
    table = rec.render_table()
    doc = json.loads(rec.to_json())
    assert f"ext_dim         {doc['ext_dim']}" in table
    for witness in doc["basis"]:
        assert witness["f"] in table
    assert str(doc["problem"]["b"]) in table


def test_parse_record_rejects_non_json():
    with pytest.raises(RecordError) as err:
        parse_record("not a document")
    assert err.value.field == "document"


def test_parse_record_names_offending_field():
    rec = _record(ExtProblem(shape=1, b=1, alpha=0, gamma=0, delta=1))
    doc = json.loads(rec.to_json())
    doc["basis"][0]["f"] = "1.5*l"
    with pytest.raises(RecordError) as err:
        parse_record(json.dumps(doc))
    assert err.value.field == "basis[0].f"


def test_parse_record_rejects_bad_problem_parameter():
    rec = _record(ExtProblem(shape=1, b=1, alpha=0, gamma=0, delta=1))
    doc = json.loads(rec.to_json())
    doc["problem"]["b"] = "x"
    with pytest.raises(RecordError) as err:
        parse_record(json.dumps(doc))
    assert err.value.field == "problem.b"


def test_parse_record_rejects_missing_dimension():
    rec = _record(ExtProblem(shape=1, b=1, alpha=0, gamma=0, delta=1))
    doc = json.loads(rec.to_json())
    del doc["ext_dim"]
    with pytest.raises(RecordError) as err:
        parse_record(json.dumps(doc))
    assert err.value.field == "ext_dim"


def test_parse_record_rejects_unknown_witness_entry():
    rec = _record(ExtProblem(shape=1, b=1, alpha=0, gamma=0, delta=1))
    doc = json.loads(rec.to_json())
    doc["basis"][0]["extra"] = "1"
    with pytest.raises(RecordError) as err:
        parse_record(json.dumps(doc))
    assert "basis[0]" in err.value.field


def test_output_is_byte_stable():
    p = ExtProblem(shape=3, b=5, alpha=0, abar=0, delta=1, dbar=-6)
    assert _record(p).to_json() == _record(p).to_json()
    assert _record(p).render_table() == _record(p).render_table()


def test_rationals_serialize_as_integer_ratio_strings():
    rec = _record(
        ExtProblem(shape=3, b=Fraction(-2, 3), alpha=0, abar=0,
                   delta=Fraction(5, 3), dbar=Fraction(-2, 3))
    )
    doc = json.loads(rec.to_json())
    assert doc["problem"]["b"] == "-2/3"
    assert doc["problem"]["delta"] == "5/3"
    assert doc["ext_dim"] == 1
