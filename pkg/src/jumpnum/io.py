"""Reading and writing the JSON interchange documents.

Four document shapes are understood::

    {"dimension": 2, "generators": [[3, 0], [0, 4]]}                      ideal
    {"dimension": 2, "terms": [{"coeff": "1", "exp": [3, 0]}, ...]}      polynomial
    {"type": "diagonal", "mu": ["3/2", "2"]}  or  {"type": "hyperbola"}  family
    {"roots": ["-7/12", "-5/6", "-11/12", "-1"]}                          roots

Documents may carry extra keys (``provenance``, ``description``); they are
ignored by the parsers. Every parse error names the field at fault.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .algebra import MonomialIdeal, SparsePolynomial, format_rational, parse_rational
from .bernstein import RootList
from .graded import DiagonalFamily


class InputError(ValueError):
    """A document is malformed; the message starts with the offending field."""

    def __init__(self, field: str, problem: str):
        super().__init__(f"field '{field}': {problem}")
        self.field = field


def load_document(path: str | Path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError("<file>", f"cannot read {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("<document>", f"not valid JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(doc, dict):
        raise InputError("<document>", "top level must be an object")
    return doc


def document_kind(doc: dict) -> str:
    if "generators" in doc:
        return "ideal"
    if "terms" in doc:
        return "polynomial"
    if "type" in doc:
        return "family"
    if "roots" in doc:
        return "roots"
    raise InputError("<document>", "expected one of 'generators', 'terms', 'type' or 'roots'")


def _int(value: Any, field: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(field, f"expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise InputError(field, f"must be >= {minimum}, got {value}")
    return value


def _list(value: Any, field: str) -> list:
    if not isinstance(value, list):
        raise InputError(field, f"expected a list, got {type(value).__name__}")
    return value


def _rational(value: Any, field: str):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InputError(field, f"expected a \"p/q\" string, got {value!r}")
    try:
        return parse_rational(str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(field, str(exc)) from exc


def _dimension(doc: dict) -> int:
    if "dimension" not in doc:
        raise InputError("dimension", "missing")
    return _int(doc["dimension"], "dimension", minimum=1)


def _exponent(value: Any, field: str, d: int) -> tuple[int, ...]:
    entries = _list(value, field)
    if len(entries) != d:
        raise InputError(field, f"expected {d} entries, got {len(entries)}")
    return tuple(_int(x, f"{field}[{k}]", minimum=0) for k, x in enumerate(entries))


def parse_ideal(doc: dict) -> MonomialIdeal:
    d = _dimension(doc)
    if "generators" not in doc:
        raise InputError("generators", "missing")
    gens = _list(doc["generators"], "generators")
    if not gens:
        raise InputError("generators", "the zero ideal is not accepted")
    return MonomialIdeal(d, [_exponent(g, f"generators[{i}]", d) for i, g in enumerate(gens)])


def parse_polynomial(doc: dict) -> SparsePolynomial:
    d = _dimension(doc)
    if "terms" not in doc:
        raise InputError("terms", "missing")
    raw = _list(doc["terms"], "terms")
    terms: dict = {}
    for i, t in enumerate(raw):
        where = f"terms[{i}]"
        if not isinstance(t, dict):
            raise InputError(where, "expected an object with 'coeff' and 'exp'")
        for key in ("coeff", "exp"):
            if key not in t:
                raise InputError(f"{where}.{key}", "missing")
        c = _rational(t["coeff"], f"{where}.coeff")
        e = _exponent(t["exp"], f"{where}.exp", d)
        terms[e] = terms.get(e, 0) + c
    poly = SparsePolynomial(d, terms)
    if poly.is_zero():
        raise InputError("terms", "the polynomial is zero")
    return poly


def parse_family(doc: dict):
    """A :class:`DiagonalFamily`, or the string ``"hyperbola"``."""
    kind = doc.get("type")
    if kind == "hyperbola":
        return "hyperbola"
    if kind != "diagonal":
        raise InputError("type", f"expected 'diagonal' or 'hyperbola', got {kind!r}")
    if "mu" not in doc:
        raise InputError("mu", "missing")
    mus = _list(doc["mu"], "mu")
    if not mus:
        raise InputError("mu", "need at least one exponent")
    values = [_rational(m, f"mu[{i}]") for i, m in enumerate(mus)]
    for i, v in enumerate(values):
        if v <= 0:
            raise InputError(f"mu[{i}]", "must be positive")
    return DiagonalFamily(values)


def parse_roots(doc: dict) -> RootList:
    if "roots" not in doc:
        raise InputError("roots", "missing")
    values = [_rational(r, f"roots[{i}]") for i, r in enumerate(_list(doc["roots"], "roots"))]
    try:
        return RootList.from_values(values)
    except ValueError as exc:
        raise InputError("roots", str(exc)) from exc


def ideal_document(ideal: MonomialIdeal) -> dict:
    return {"dimension": ideal.dimension, "generators": [list(g) for g in ideal.generators]}


def polynomial_document(f: SparsePolynomial) -> dict:
    return {
        "dimension": f.dimension,
        "terms": [{"coeff": format_rational(c), "exp": list(e)} for e, c in sorted(f.terms.items(), reverse=True)],
    }


def dumps(doc: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
