"""JSON file format for algebras, morphisms, and element expressions.

An algebra document looks like::

    {
      "dimension": 2,
      "basis": ["e1", "e2"],
      "parameters": ["t"],
      "products": [
        {"left": 0, "right": 1,
         "result": [{"index": 0, "coeff": "1/2"}]}
      ],
      "alpha": [
        {"from": 0,
         "to": [{"index": 0, "coeff": {"poly": [{"coeff": "1", "exps": {"t": 1}}]}}]}
      ]
    }

Indices are 0-based; omitted product pairs and twist rows are zero.
Coefficients use the scalar text encoding from :mod:`homalt.scalars` and may
only mention declared parameters.  A morphism document has the same shape
with a ``matrix`` list of ``{"from", "to"}`` rows instead of products/alpha.
Parsing reports the offending field path on malformed input, and
serialization emits a canonical, byte-stable form, so parse and serialize
are mutually inverse on canonical documents.  Dimensions above 64 are
rejected at load time to keep basis sweeps tractable.
"""

from __future__ import annotations

import json
import re
from typing import NamedTuple, Sequence

from .homalgebra import Element, HomAlgebra, MuTable, RowTable
from .scalars import Scalar, decode_scalar, encode_scalar, parse_rational, variables

DIMENSION_CAP = 64


class AlgebraFormatError(ValueError):
    """Malformed document; the message starts with the offending field path."""

    def __init__(self, where: str, problem: str):
        self.where = where
        self.problem = problem
        super().__init__(f"{where}: {problem}")


class AlgebraDocument(NamedTuple):
    algebra: HomAlgebra
    basis_names: list[str]


def _load_json(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFormatError(f"line {exc.lineno}, column {exc.colno}", f"invalid JSON: {exc.msg}")


def _expect_int(value: object, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise AlgebraFormatError(where, f"expected an integer, got {type(value).__name__}")
    return value


def _expect_index(value: object, dim: int, where: str) -> int:
    idx = _expect_int(value, where)
    if not 0 <= idx < dim:
        raise AlgebraFormatError(where, f"index {idx} out of range for dimension {dim}")
    return idx


def _expect_list(value: object, where: str) -> list:
    if not isinstance(value, list):
        raise AlgebraFormatError(where, f"expected a list, got {type(value).__name__}")
    return value


def _expect_obj(value: object, where: str, allowed: set[str], required: set[str]) -> dict:
    if not isinstance(value, dict):
        raise AlgebraFormatError(where, f"expected an object, got {type(value).__name__}")
    extra = set(value) - allowed
    if extra:
        raise AlgebraFormatError(where, f"unknown keys {sorted(extra)}")
    missing = required - set(value)
    if missing:
        raise AlgebraFormatError(where, f"missing keys {sorted(missing)}")
    return value


def _decode_coeff(obj: object, params: set[str], where: str) -> Scalar:
    try:
        value = decode_scalar(obj)
    except ValueError as exc:
        raise AlgebraFormatError(where, f"bad scalar encoding: {exc}")
    stray = variables(value) - params
    if stray:
        raise AlgebraFormatError(where, f"undeclared parameters {sorted(stray)}")
    return value


def _decode_sparse(items: object, dim: int, params: set[str], where: str) -> tuple:
    out = []
    for pos, item in enumerate(_expect_list(items, where)):
        entry = _expect_obj(item, f"{where}[{pos}]", {"index", "coeff"}, {"index", "coeff"})
        idx = _expect_index(entry["index"], dim, f"{where}[{pos}].index")
        coeff = _decode_coeff(entry["coeff"], params, f"{where}[{pos}].coeff")
        out.append((idx, coeff))
    return tuple(out)


def _decode_params(value: object, where: str) -> tuple[str, ...]:
    names = []
    for pos, name in enumerate(_expect_list(value, where)):
        if not isinstance(name, str) or not name.isidentifier():
            raise AlgebraFormatError(f"{where}[{pos}]", f"bad parameter name {name!r}")
        if name in names:
            raise AlgebraFormatError(f"{where}[{pos}]", f"duplicate parameter {name!r}")
        names.append(name)
    return tuple(names)


def _decode_dimension(doc: dict) -> int:
    dim = _expect_int(doc.get("dimension"), "dimension")
    if dim < 0:
        raise AlgebraFormatError("dimension", "must be nonnegative")
    if dim > DIMENSION_CAP:
        raise AlgebraFormatError("dimension", f"{dim} exceeds the supported cap of {DIMENSION_CAP}")
    return dim


def parse_document(text: str) -> AlgebraDocument:
    """Parse an algebra document, returning the algebra and its basis names."""
    doc = _expect_obj(
        _load_json(text), "document",
        {"dimension", "basis", "parameters", "products", "alpha"},
        {"dimension", "products", "alpha"},
    )
    dim = _decode_dimension(doc)
    if "basis" in doc:
        names = _expect_list(doc["basis"], "basis")
        if len(names) != dim or not all(isinstance(n, str) and n for n in names):
            raise AlgebraFormatError("basis", f"expected {dim} nonempty names")
        basis_names = list(names)
    else:
        basis_names = [f"e{i + 1}" for i in range(dim)]
    params = _decode_params(doc.get("parameters", []), "parameters")
    param_set = set(params)

    mu: MuTable = {}
    for pos, item in enumerate(_expect_list(doc["products"], "products")):
        where = f"products[{pos}]"
        entry = _expect_obj(item, where, {"left", "right", "result"}, {"left", "right", "result"})
        i = _expect_index(entry["left"], dim, f"{where}.left")
        j = _expect_index(entry["right"], dim, f"{where}.right")
        if (i, j) in mu:
            raise AlgebraFormatError(where, f"duplicate product entry for pair ({i}, {j})")
        mu[(i, j)] = _decode_sparse(entry["result"], dim, param_set, f"{where}.result")

    alpha: RowTable = {}
    for pos, item in enumerate(_expect_list(doc["alpha"], "alpha")):
        where = f"alpha[{pos}]"
        entry = _expect_obj(item, where, {"from", "to"}, {"from", "to"})
        i = _expect_index(entry["from"], dim, f"{where}.from")
        if i in alpha:
            raise AlgebraFormatError(where, f"duplicate twist row for index {i}")
        alpha[i] = _decode_sparse(entry["to"], dim, param_set, f"{where}.to")

    return AlgebraDocument(HomAlgebra(dim, mu, alpha, params), basis_names)


def parse_algebra(text: str) -> HomAlgebra:
    return parse_document(text).algebra


def serialize_algebra(A: HomAlgebra, basis_names: Sequence[str] | None = None) -> str:
    """Canonical JSON text for an algebra (sorted entries, stable bytes)."""
    if basis_names is not None and len(basis_names) != A.dim:
        raise ValueError(f"expected {A.dim} basis names, got {len(basis_names)}")
    names = list(basis_names) if basis_names is not None else [f"e{i + 1}" for i in range(A.dim)]
    doc = {
        "dimension": A.dim,
        "basis": names,
        "parameters": list(A.params),
        "products": [
            {
                "left": i,
                "right": j,
                "result": [{"index": k, "coeff": encode_scalar(c)} for k, c in row],
            }
            for (i, j), row in sorted(A.mu.items())
        ],
        "alpha": [
            {"from": i, "to": [{"index": k, "coeff": encode_scalar(c)} for k, c in row]}
            for i, row in sorted(A.alpha.items())
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_morphism(text: str) -> tuple[RowTable, int, tuple[str, ...]]:
    """Parse a morphism document into (rows, dimension, parameters)."""
    doc = _expect_obj(
        _load_json(text), "document",
        {"dimension", "parameters", "matrix"},
        {"dimension", "matrix"},
    )
    dim = _decode_dimension(doc)
    params = _decode_params(doc.get("parameters", []), "parameters")
    param_set = set(params)
    rows: RowTable = {}
    for pos, item in enumerate(_expect_list(doc["matrix"], "matrix")):
        where = f"matrix[{pos}]"
        entry = _expect_obj(item, where, {"from", "to"}, {"from", "to"})
        i = _expect_index(entry["from"], dim, f"{where}.from")
        if i in rows:
            raise AlgebraFormatError(where, f"duplicate matrix row for index {i}")
        rows[i] = _decode_sparse(entry["to"], dim, param_set, f"{where}.to")
    return rows, dim, params


def serialize_morphism(rows: RowTable, dim: int, params: Sequence[str] = ()) -> str:
    doc = {
        "dimension": dim,
        "parameters": list(params),
        "matrix": [
            {"from": i, "to": [{"index": k, "coeff": encode_scalar(c)} for k, c in row]}
            for i, row in sorted(rows.items())
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def encode_element(x: Element) -> list[dict]:
    return [
        {"index": i, "coeff": encode_scalar(c)} for i, c in enumerate(x.coords) if c != 0
    ]


_TERM_RE = re.compile(r"([+-]?)\s*([^+-]+)")


def parse_element_expr(expr: str, basis_names: Sequence[str]) -> Element:
    """Parse a linear combination such as ``e7 - e8`` or ``3/2*e1 + e4``.

    Basis vectors are referred to by the given names; coefficients are
    rationals written ``p`` or ``p/q``.
    """
    positions = {name: i for i, name in enumerate(basis_names)}
    coords: list[Scalar] = [0] * len(basis_names)
    rest = expr.strip()
    if not rest:
        raise ValueError("empty element expression")
    matched_to = 0
    for m in _TERM_RE.finditer(rest):
        if m.start() != matched_to:
            raise ValueError(f"cannot parse element expression near {rest[matched_to:]!r}")
        matched_to = m.end()
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2).strip()
        if "*" in body:
            coeff_text, _, name = body.partition("*")
            coeff = parse_rational(coeff_text)
            name = name.strip()
        else:
            coeff, name = 1, body
        if name not in positions:
            raise ValueError(f"unknown basis element {name!r}")
        idx = positions[name]
        coords[idx] = coords[idx] + sign * coeff
    if matched_to != len(rest):
        raise ValueError(f"cannot parse element expression near {rest[matched_to:]!r}")
    return Element(tuple(coords))
