"""Algebra file format: round-trips, diagnostics, element expressions."""

import json
from fractions import Fraction

import pytest

from homalt.algfile import (
    AlgebraFormatError,
    encode_element,
    parse_algebra,
    parse_document,
    parse_element_expr,
    parse_morphism,
    serialize_algebra,
    serialize_morphism,
)
from homalt.catalog import FamilyParams, mikheev_morphism
from homalt.homalgebra import Element, substitute_params
from homalt.scalars import Poly


def test_round_trip_base_algebra(mikheev):
    text = serialize_algebra(mikheev)
    again = parse_algebra(text)
    assert again.dim == mikheev.dim
    assert again.mu == mikheev.mu
    assert again.alpha == mikheev.alpha
    assert again.params == mikheev.params
    assert serialize_algebra(again) == text


def test_round_trip_symbolic_family(fam_sym):
    text = serialize_algebra(fam_sym)
    again = parse_algebra(text)
    assert again.mu == fam_sym.mu
    assert again.alpha == fam_sym.alpha
    assert again.params == ("lambda", "xi")


def test_substitution_after_parse_matches_direct(fam_sym, fam23):
    parsed = parse_algebra(serialize_algebra(fam_sym))
    sub = substitute_params(parsed, {"lambda": 2, "xi": 3})
    assert sub.mu == fam23.mu
    assert sub.alpha == fam23.alpha


def test_basis_names_round_trip(mikheev):
    names = [f"b{i}" for i in range(13)]
    doc = parse_document(serialize_algebra(mikheev, names))
    assert doc.basis_names == names
    assert parse_document(serialize_algebra(mikheev)).basis_names[0] == "e1"


def test_serialization_is_canonical(fam23):
    assert serialize_algebra(fam23) == serialize_algebra(parse_algebra(serialize_algebra(fam23)))


def test_product_index_out_of_range(mikheev):
    doc = json.loads(serialize_algebra(mikheev))
    doc["products"][0]["left"] = 13
    with pytest.raises(AlgebraFormatError) as exc:
        parse_algebra(json.dumps(doc))
    assert "index 13 out of range" in str(exc.value)
    assert "products[0].left" in str(exc.value)


def test_result_index_out_of_range(mikheev):
    doc = json.loads(serialize_algebra(mikheev))
    doc["products"][0]["result"][0]["index"] = 40
    with pytest.raises(AlgebraFormatError) as exc:
        parse_algebra(json.dumps(doc))
    assert "out of range" in str(exc.value)


def test_invalid_json_reports_position():
    with pytest.raises(AlgebraFormatError) as exc:
        parse_algebra("{\n  broken")
    assert "line 2" in str(exc.value)
    assert "invalid JSON" in str(exc.value)


def test_duplicate_product_pair(mikheev):
    doc = json.loads(serialize_algebra(mikheev))
    doc["products"].append(dict(doc["products"][0]))
    with pytest.raises(AlgebraFormatError) as exc:
        parse_algebra(json.dumps(doc))
    assert "duplicate product" in str(exc.value)


def test_duplicate_alpha_row(mikheev):
    doc = json.loads(serialize_algebra(mikheev))
    doc["alpha"].append(dict(doc["alpha"][0]))
    with pytest.raises(AlgebraFormatError) as exc:
        parse_algebra(json.dumps(doc))
    assert "duplicate twist row" in str(exc.value)


def test_undeclared_parameter_rejected(fam_sym):
    doc = json.loads(serialize_algebra(fam_sym))
    doc["parameters"] = ["lambda"]
    with pytest.raises(AlgebraFormatError) as exc:
        parse_algebra(json.dumps(doc))
    assert "xi" in str(exc.value)


def test_dimension_cap():
    doc = {"dimension": 65, "products": [], "alpha": []}
    with pytest.raises(AlgebraFormatError) as exc:
        parse_algebra(json.dumps(doc))
    assert "cap" in str(exc.value)
    big = {"dimension": 64, "products": [], "alpha": []}
    assert parse_algebra(json.dumps(big)).dim == 64


def test_unknown_and_missing_keys():
    with pytest.raises(AlgebraFormatError) as exc:
        parse_algebra(json.dumps({"dimension": 2, "products": [], "alpha": [], "extra": 1}))
    assert "extra" in str(exc.value)
    with pytest.raises(AlgebraFormatError) as exc:
        parse_algebra(json.dumps({"dimension": 2, "products": []}))
    assert "alpha" in str(exc.value)


def test_bad_basis_length():
    doc = {"dimension": 2, "basis": ["x"], "products": [], "alpha": []}
    with pytest.raises(AlgebraFormatError):
        parse_algebra(json.dumps(doc))


def test_morphism_round_trip():
    rows = mikheev_morphism(FamilyParams.symbolic())
    text = serialize_morphism(rows, 13, ("lambda", "xi"))
    back, dim, params = parse_morphism(text)
    assert back == rows
    assert dim == 13
    assert params == ("lambda", "xi")


def test_morphism_duplicate_row():
    text = json.dumps({
        "dimension": 2,
        "matrix": [
            {"from": 0, "to": [{"index": 0, "coeff": "1"}]},
            {"from": 0, "to": [{"index": 1, "coeff": "1"}]},
        ],
    })
    with pytest.raises(AlgebraFormatError) as exc:
        parse_morphism(text)
    assert "duplicate matrix row" in str(exc.value)


def test_encode_element():
    x = Element((1, 0, Fraction(-3, 2)))
    assert encode_element(x) == [
        {"index": 0, "coeff": "1"},
        {"index": 2, "coeff": "-3/2"},
    ]
    assert encode_element(Element((0, 0))) == []


def test_parse_element_expr():
    names = [f"e{i + 1}" for i in range(13)]
    x = parse_element_expr("e7 - e8", names)
    assert x.coords[6] == 1 and x.coords[7] == -1
    y = parse_element_expr("3/2*e1 + e4", names)
    assert y.coords[0] == Fraction(3, 2) and y.coords[3] == 1
    z = parse_element_expr("-e2", names)
    assert z.coords[1] == -1
    merged = parse_element_expr("e1 + e1", names)
    assert merged.coords[0] == 2


def test_parse_element_expr_custom_names():
    x = parse_element_expr("2*u - v", ["u", "v"])
    assert x.coords == (2, -1)


def test_parse_element_expr_rejects_garbage():
    names = ["e1", "e2"]
    for bad in ("", "e3", "1.5*e1", "e1 e2", "* e1", "e1 +", "2*"):
        with pytest.raises(ValueError):
            parse_element_expr(bad, names)


def test_nonneg_dimension_required():
    with pytest.raises(AlgebraFormatError):
        parse_algebra(json.dumps({"dimension": -1, "products": [], "alpha": []}))
    with pytest.raises(AlgebraFormatError):
        parse_algebra(json.dumps({"dimension": "two", "products": [], "alpha": []}))


def test_file_coeff_shapes():
    doc = {
        "dimension": 2,
        "parameters": ["t"],
        "products": [
            {"left": 0, "right": 0,
             "result": [{"index": 1, "coeff": {"poly": [{"coeff": "2", "exps": {"t": 3}}]}}]},
        ],
        "alpha": [{"from": 0, "to": [{"index": 0, "coeff": "1/2"}]}],
    }
    A = parse_algebra(json.dumps(doc))
    t = Poly.variable("t")
    assert A.mul(A.basis_element(0), A.basis_element(0)) == A.basis_element(1).scale(2 * t**3)
    assert A.twist_apply(A.basis_element(0)) == A.basis_element(0).scale(Fraction(1, 2))
