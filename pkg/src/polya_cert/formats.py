"""JSON documents for matrix forms, certificates and search reports.

Rationals travel as strings (``"-3/7"``, ``"5"``) in lowest terms with a
positive denominator; plain JSON integers are also accepted on input.
Floats never appear in a certificate.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .certify import Counterexample, PolyaCertificate, PureStateScan, SearchReport
from .errors import AsymmetricMatrixError, ParseError, PolyaError
from .matrix_form import MatrixForm
from .poly import monomial_count
from .psd import PDWitness
from .symmatrix import SymMatrix

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(value: Any, path: str) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(path, "boolean is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ParseError(path, f"expected an integer or a 'p/q' string, got {type(value).__name__}")
    text = value.strip().replace("−", "-")
    if not _RATIONAL.match(text):
        raise ParseError(path, f"malformed rational {value!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(path, f"zero denominator in {value!r}") from None


def _field(doc: dict, key: str, path: str = ""):
    if not isinstance(doc, dict):
        raise ParseError(path or "<root>", "expected an object")
    if key not in doc:
        raise ParseError(f"{path}{key}" if not path else f"{path}.{key}", "missing field")
    return doc[key]


def _int_field(doc: dict, key: str, path: str = "", minimum: int = 0) -> int:
    value = _field(doc, key, path)
    where = f"{path}.{key}" if path else key
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(where, "expected an integer")
    if value < minimum:
        raise ParseError(where, f"must be >= {minimum}")
    return value


def _int_vector(value, path: str, length: int) -> tuple[int, ...]:
    if not isinstance(value, list) or any(isinstance(a, bool) or not isinstance(a, int) for a in value):
        raise ParseError(path, "expected a list of integers")
    if len(value) != length:
        raise ParseError(path, f"expected {length} entries, got {len(value)}")
    if any(a < 0 for a in value):
        raise ParseError(path, "exponents must be nonnegative")
    return tuple(value)


def matrix_form_from_doc(doc: dict) -> MatrixForm:
    n = _int_field(doc, "n_vars", minimum=1)
    r = _int_field(doc, "size", minimum=1)
    d = _int_field(doc, "degree", minimum=0)
    entries = _field(doc, "coeffs")
    if not isinstance(entries, list):
        raise ParseError("coeffs", "expected a list")
    coeffs = {}
    for k, item in enumerate(entries):
        path = f"coeffs[{k}]"
        alpha = _int_vector(_field(item, "alpha", path), f"{path}.alpha", n)
        if sum(alpha) != d:
            raise ParseError(f"{path}.alpha", f"length {sum(alpha)} does not match degree {d}")
        if alpha in coeffs:
            raise ParseError(f"{path}.alpha", f"duplicate multi-index {list(alpha)}")
        rows = _field(item, "matrix", path)
        if not isinstance(rows, list) or len(rows) != r:
            raise ParseError(f"{path}.matrix", f"expected {r} rows")
        parsed = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != r:
                raise ParseError(f"{path}.matrix[{i}]", f"expected {r} entries")
            parsed.append([parse_rational(v, f"{path}.matrix[{i}][{j}]") for j, v in enumerate(row)])
        try:
            coeffs[alpha] = SymMatrix(parsed)
        except AsymmetricMatrixError as exc:
            raise ParseError(path, f"asymmetric at ({exc.i}, {exc.j})") from None
    try:
        return MatrixForm(n, r, d, coeffs)
    except PolyaError as exc:
        raise ParseError("", str(exc)) from None


def matrix_form_to_doc(B: MatrixForm) -> dict:
    return {
        "n_vars": B.n_vars,
        "size": B.size,
        "degree": B.degree,
        "coeffs": [
            {"alpha": list(a), "matrix": [[format_rational(q) for q in row] for row in P.rows]}
            for a, P in B.coeffs.items()
        ],
    }


def parse_matrix_form(text: str) -> MatrixForm:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("", f"invalid JSON: {exc}") from None
    return matrix_form_from_doc(doc)


def serialize_matrix_form(B: MatrixForm) -> str:
    return dump_doc(matrix_form_to_doc(B))


def dump_doc(doc) -> str:
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=True) + "\n"


def _witness_docs(cert: PolyaCertificate) -> list[dict]:
    return [
        {"alpha": list(a), "minors": [format_rational(q) for q in w.minors]}
        for a, w in cert.witnesses.items()
    ]


def report_to_doc(report: SearchReport, witnesses: bool = False) -> dict:
    if report.outcome == "certified":
        cert = report.certificate
        doc = {"outcome": "certified", "m": cert.m, "witnesses": len(cert.witnesses)}
        if witnesses:
            doc.update(
                n_vars=cert.n_vars,
                size=cert.size,
                degree=cert.degree,
                witness_minors=_witness_docs(cert),
            )
        return doc
    if report.outcome == "refuted":
        return counterexample_to_doc(report.counterexample)
    return {
        "outcome": "inconclusive",
        "m_max": report.m_max,
        "grid_depth": report.grid_depth,
        "failures": [{"m": m, "alpha": list(a)} for m, a in report.failures],
    }


def counterexample_to_doc(ce: Counterexample) -> dict:
    return {
        "outcome": "refuted",
        "point": [format_rational(q) for q in ce.point],
        "direction": [format_rational(q) for q in ce.direction],
        "value": format_rational(ce.value),
    }


def emit_report(report: SearchReport, witnesses: bool = False) -> str:
    return dump_doc(report_to_doc(report, witnesses))


def emit_margin(depth: int, margin: Fraction) -> str:
    return dump_doc(
        {
            "outcome": "margin",
            "grid_depth": depth,
            "margin": format_rational(margin),
            "margin_approx": float(margin),
        }
    )


def emit_pure_state_scan(depth: int, scan: PureStateScan) -> str:
    return dump_doc(
        {
            "outcome": "pure-state-scan",
            "grid_depth": depth,
            "states": scan.states,
            "min_value": format_rational(scan.min_value),
            "point": [format_rational(q) for q in scan.point],
            "direction": [format_rational(q) for q in scan.direction],
        }
    )


def certificate_from_doc(doc: dict) -> PolyaCertificate:
    """Read a certificate from a ``certified`` report emitted with witnesses."""
    m = _int_field(doc, "m")
    n = _int_field(doc, "n_vars", minimum=1)
    r = _int_field(doc, "size", minimum=1)
    degree = _int_field(doc, "degree")
    items = _field(doc, "witness_minors")
    if not isinstance(items, list):
        raise ParseError("witness_minors", "expected a list")
    witnesses = {}
    for k, item in enumerate(items):
        path = f"witness_minors[{k}]"
        alpha = _int_vector(_field(item, "alpha", path), f"{path}.alpha", n)
        if alpha in witnesses:
            raise ParseError(f"{path}.alpha", f"duplicate multi-index {list(alpha)}")
        minors = _field(item, "minors", path)
        if not isinstance(minors, list):
            raise ParseError(f"{path}.minors", "expected a list")
        witnesses[alpha] = PDWitness(
            r, tuple(parse_rational(v, f"{path}.minors[{i}]") for i, v in enumerate(minors))
        )
    if "witnesses" in doc and doc["witnesses"] != len(witnesses):
        raise ParseError("witnesses", f"count {doc['witnesses']} disagrees with {len(witnesses)} listed")
    if len(witnesses) > monomial_count(n, degree):
        raise ParseError("witness_minors", "more witnesses than monomials")
    try:
        return PolyaCertificate(m, n, r, degree, witnesses)
    except PolyaError as exc:
        raise ParseError("witness_minors", str(exc)) from None


def parse_certificate(text: str) -> PolyaCertificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("", f"invalid JSON: {exc}") from None
    return certificate_from_doc(doc)
