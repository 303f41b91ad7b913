from __future__ import annotations

import json

import pytest

from omnicolor.errors import ParseError, SchemaError
from omnicolor.fileformat import dump_algebra_file, parse_algebra_file
from omnicolor.fixtures import FIXTURES, fixture
from omnicolor.grading import validate_bicharacter
from omnicolor.scalars import Scalar

MINIMAL = {
    "cyclotomic_order": 1,
    "group": {"cyclic_orders": [1]},
    "bicharacter": {"exponents": [[0]]},
    "space": {"basis": [{"name": "x", "degree": [0]}]},
}


def super_doc(**extra):
    doc = {
        "cyclotomic_order": 2,
        "group": {"cyclic_orders": [2]},
        "bicharacter": {"exponents": [[1]]},
        "space": {"basis": [{"name": "u", "degree": [0]}, {"name": "v", "degree": [1]}]},
    }
    doc.update(extra)
    return doc


def test_minimal_file_parses():
    f = parse_algebra_file(json.dumps(MINIMAL))
    assert f.space.dim == 1 and f.algebra is None and f.order == 1


def test_invalid_bicharacter_parses_then_fails_validation():
    doc = {"cyclotomic_order": 3, "group": {"cyclic_orders": [3, 3]},
           "bicharacter": {"exponents": [[0, 1], [1, 0]]}}
    f = parse_algebra_file(json.dumps(doc))
    v = validate_bicharacter(f.bicharacter)
    assert not v.passed and not v["symmetry"].passed


def test_scalar_literals_in_entries():
    doc = super_doc(bracket={"entries": [{"i": 0, "j": 1, "k": 1, "coeff": "1/2"},
                                         {"i": 1, "j": 0, "k": 1, "coeff": -1}]})
    f = parse_algebra_file(json.dumps(doc))
    assert f.algebra.bracket.on_basis(0, 1) == {1: Scalar.rational(2, 0.5)}


def test_malformed_literal_is_a_parse_error_naming_the_field():
    doc = super_doc(bracket={"entries": [{"i": 0, "j": 1, "k": 1, "coeff": "1//2*z"}]})
    with pytest.raises(ParseError, match=r"bracket\.entries\[0\]\.coeff"):
        parse_algebra_file(json.dumps(doc))


def test_json_syntax_error_carries_position():
    with pytest.raises(ParseError) as info:
        parse_algebra_file('{\n  "cyclotomic_order": 2,\n  oops\n}')
    assert info.value.line == 3 and info.value.column is not None


@pytest.mark.parametrize("mutate, field", [
    (lambda d: d.pop("group"), "group"),
    (lambda d: d["space"]["basis"][0].update(degree=[0, 0]), "space.basis[0].degree"),
    (lambda d: d.update(bracket={"entries": [{"i": 0, "j": 5, "k": 0, "coeff": "1"}]}),
     "bracket.entries[0].j"),
    (lambda d: d["space"]["basis"].append({"name": "u", "degree": [1]}), "space.basis"),
    (lambda d: d.update(quadratic={"gram": [[1]]}), "quadratic"),
])
def test_schema_errors_name_the_field(mutate, field):
    doc = super_doc()
    mutate(doc)
    if field == "quadratic":
        doc["bracket"] = {"entries": []}
    with pytest.raises(SchemaError) as info:
        parse_algebra_file(json.dumps(doc))
    assert field in str(info.value)


def test_every_fixture_roundtrips_byte_identically():
    for name in FIXTURES:
        text = dump_algebra_file(fixture(name))
        assert dump_algebra_file(parse_algebra_file(text)) == text, name
