import json
from fractions import Fraction

import pytest

from jumpnum.algebra import MonomialIdeal, SparsePolynomial
from jumpnum.graded import DiagonalFamily
from jumpnum.io import (
    InputError,
    document_kind,
    dumps,
    ideal_document,
    load_document,
    parse_family,
    parse_ideal,
    parse_polynomial,
    parse_roots,
    polynomial_document,
)

F = Fraction


def test_every_case_file_parses(cases_dir):
    parsers = {"ideal": parse_ideal, "polynomial": parse_polynomial, "family": parse_family, "roots": parse_roots}
    files = sorted(cases_dir.glob("*.json"))
    assert files
    for path in files:
        doc = load_document(path)
        assert "provenance" in doc and "description" in doc
        parsers[document_kind(doc)](doc)


def test_ideal_round_trip():
    ideal = MonomialIdeal(2, [(3, 0), (0, 4), (1, 1)])
    assert parse_ideal(json.loads(dumps(ideal_document(ideal)))) == ideal


def test_polynomial_round_trip():
    f = SparsePolynomial(2, {(3, 0): 1, (0, 4): F(-2, 3)})
    doc = json.loads(dumps(polynomial_document(f)))
    assert doc["terms"][0]["coeff"] == "1/1"
    assert parse_polynomial(doc) == f


def test_repeated_exponents_are_summed():
    doc = {"dimension": 1, "terms": [{"coeff": "1", "exp": [2]}, {"coeff": "1/2", "exp": [2]}]}
    assert parse_polynomial(doc) == SparsePolynomial(1, {(2,): F(3, 2)})


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == dumps({"a": [1, 2], "b": 1})
    assert dumps({}).endswith("\n")


@pytest.mark.parametrize(
    "doc, field",
    [
        ({"generators": [[1, 0]]}, "dimension"),
        ({"dimension": 0, "generators": [[1]]}, "dimension"),
        ({"dimension": 2}, "generators"),
        ({"dimension": 2, "generators": []}, "generators"),
        ({"dimension": 2, "generators": [[1, 0], [1]]}, "generators[1]"),
        ({"dimension": 2, "generators": [[1, -1]]}, "generators[0][1]"),
        ({"dimension": 2, "generators": [[1, "2"]]}, "generators[0][1]"),
    ],
)
def test_ideal_errors_name_the_field(doc, field):
    with pytest.raises(InputError) as err:
        parse_ideal(doc)
    assert err.value.field == field
    assert str(err.value).startswith(f"field '{field}'")


@pytest.mark.parametrize(
    "doc, field",
    [
        ({"dimension": 2, "terms": [{"exp": [1, 0]}]}, "terms[0].coeff"),
        ({"dimension": 2, "terms": [{"coeff": "0.5", "exp": [1, 0]}]}, "terms[0].coeff"),
        ({"dimension": 2, "terms": [{"coeff": 0.5, "exp": [1, 0]}]}, "terms[0].coeff"),
        ({"dimension": 2, "terms": [{"coeff": "1", "exp": [1, 0, 0]}]}, "terms[0].exp"),
        ({"dimension": 2, "terms": ["s"]}, "terms[0]"),
        ({"dimension": 2, "terms": [{"coeff": "1", "exp": [1, 0]}, {"coeff": "-1", "exp": [1, 0]}]}, "terms"),
    ],
)
def test_polynomial_errors_name_the_field(doc, field):
    with pytest.raises(InputError) as err:
        parse_polynomial(doc)
    assert err.value.field == field


def test_family_parsing():
    assert parse_family({"type": "hyperbola"}) == "hyperbola"
    assert parse_family({"type": "diagonal", "mu": ["3/2", 2]}) == DiagonalFamily([F(3, 2), 2])
    for doc, field in [
        ({"type": "cone"}, "type"),
        ({"type": "diagonal"}, "mu"),
        ({"type": "diagonal", "mu": ["1", "-2"]}, "mu[1]"),
    ]:
        with pytest.raises(InputError) as err:
            parse_family(doc)
        assert err.value.field == field


def test_roots_parsing():
    rl = parse_roots({"roots": ["-1", "-7/12"]})
    assert rl.roots == (F(-7, 12), F(-1))
    with pytest.raises(InputError) as err:
        parse_roots({"roots": ["-1/2"]})
    assert err.value.field == "roots"
    with pytest.raises(InputError) as err:
        parse_roots({"roots": ["-1", "x"]})
    assert err.value.field == "roots[1]"


def test_load_errors(tmp_path):
    with pytest.raises(InputError) as err:
        load_document(tmp_path / "absent.json")
    assert err.value.field == "<file>"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputError) as err:
        load_document(bad)
    assert err.value.field == "<document>"
    bad.write_text("[1, 2]")
    with pytest.raises(InputError):
        load_document(bad)
    with pytest.raises(InputError):
        document_kind({"dimension": 2})
