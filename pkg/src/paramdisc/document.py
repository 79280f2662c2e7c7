"""
JSON matrix documents.

A document lists upper- or lower-triangle entries with 1-based indices and
coefficients (lowest power first) written as integers or ``"p/q"`` strings::

    {"n": 2, "parameter": "lambda",
     "entries": [{"i": 1, "j": 2, "coeffs": ["1"]}]}

Mirrored entries are implied.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ValidationError
from .matrix import ParametricMatrix, build
from .poly import format_rational, to_rational


class DocumentError(ValidationError):
    """The input document is malformed or inconsistent."""


@dataclass(frozen=True)
class DocumentEntry:
    i: int
    j: int
    coeffs: tuple


@dataclass(frozen=True)
class MatrixDocument:
    n: int
    entries: tuple
    parameter: str = "lambda"

    def to_matrix(self) -> ParametricMatrix:
        try:
            return build(self.n, {(e.i, e.j): list(e.coeffs) for e in self.entries}, self.parameter)
        except ValidationError as exc:
            raise DocumentError(str(exc)) from exc

    @classmethod
    def from_matrix(cls, H: ParametricMatrix) -> "MatrixDocument":
        entries = []
        for i in range(H.n):
            for j in range(i, H.n):
                p = H.entries[i][j]
                if not p.is_zero:
                    entries.append(DocumentEntry(i + 1, j + 1, tuple(p.coeffs)))
        return cls(H.n, tuple(entries), H.var)

    def digest(self) -> str:
        return "sha256:" + hashlib.sha256(serialize_document(self).encode("utf-8")).hexdigest()


def _int_field(obj: dict, key: str, where: str) -> int:
    if key not in obj:
        raise DocumentError(f"{where}: missing field {key!r}")
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise DocumentError(f"{where}: field {key!r} must be an integer, got {v!r}")
    return v


def _coefficient(v, where: str) -> Fraction:
    if isinstance(v, (float, bool)) or not isinstance(v, (int, str)):
        raise DocumentError(f"{where}: coefficient {v!r} must be an integer or a 'p/q' string")
    try:
        return to_rational(v)
    except DomainError as exc:
        raise DocumentError(f"{where}: {exc}") from None


def parse_document(data) -> MatrixDocument:
    """Parse and validate a UTF-8 JSON document (bytes or str)."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"document is not UTF-8: {exc}") from None
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    unknown = set(obj) - {"n", "parameter", "entries"}
    if unknown:
        raise DocumentError(f"unknown document fields: {sorted(unknown)}")
    n = _int_field(obj, "n", "document")
    if n < 1:
        raise DocumentError(f"document: n must be positive, got {n}")
    parameter = obj.get("parameter", "lambda")
    if not isinstance(parameter, str) or not parameter or parameter == "E":
        raise DocumentError(f"document: invalid parameter name {parameter!r}")
    raw = obj.get("entries", [])
    if not isinstance(raw, list):
        raise DocumentError("document: 'entries' must be a list")
    entries, seen = [], set()
    for k, item in enumerate(raw):
        where = f"entry #{k + 1}"
        if not isinstance(item, dict):
            raise DocumentError(f"{where}: must be an object")
        extra = set(item) - {"i", "j", "coeffs"}
        if extra:
            raise DocumentError(f"{where}: unknown fields {sorted(extra)}")
        i = _int_field(item, "i", where)
        j = _int_field(item, "j", where)
        if not (1 <= i <= n and 1 <= j <= n):
            raise DocumentError(f"{where}: index ({i},{j}) outside 1..{n}")
        if (i, j) in seen:
            raise DocumentError(f"{where}: duplicate entry ({i},{j})")
        seen.add((i, j))
        coeffs = item.get("coeffs")
        if not isinstance(coeffs, list):
            raise DocumentError(f"{where}: 'coeffs' must be a list")
        entries.append(DocumentEntry(i, j, tuple(_coefficient(c, f"{where} ({i},{j})") for c in coeffs)))
    doc = MatrixDocument(n, tuple(entries), parameter)
    doc.to_matrix()  # symmetry conflicts surface here
    return doc


def document_to_dict(doc: MatrixDocument) -> dict:
    return {
        "n": doc.n,
        "parameter": doc.parameter,
        "entries": [
            {"i": e.i, "j": e.j, "coeffs": [format_rational(c) for c in e.coeffs]}
            for e in doc.entries
        ],
    }


def serialize_document(doc: MatrixDocument) -> str:
    from .output import dumps

    return dumps(document_to_dict(doc)) + "\n"
