"""JSON encodings of matrices, torus elements, Lie elements and involutions.

Rationals are strings ``"p/q"`` or ``"p"``; degrees are integer arrays.
"""

from __future__ import annotations

import json
from pathlib import Path

from .octonion_torus import OctElement
from .quantum_torus import QTElement
from .scalars import QuantumMatrix, format_rational, make_quantum_matrix, to_rational


class InputError(ValueError):
    """Malformed JSON input."""


def _rational(v):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise InputError(f"rationals are encoded as strings or integers, got {v!r}")
    try:
        return to_rational(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {v!r}: {exc}") from None


def quantum_matrix_to_json(q: QuantumMatrix) -> dict:
    return {"n": q.n, "q": [[format_rational(x) for x in row] for row in q.entries]}


def quantum_matrix_from_json(data) -> QuantumMatrix:
    if not isinstance(data, dict) or "q" not in data:
        raise InputError('quantum matrix JSON needs a "q" field')
    rows = data["q"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError('"q" must be a list of lists')
    if "n" in data and data["n"] != len(rows):
        raise InputError(f'"n" is {data["n"]} but "q" has {len(rows)} rows')
    return make_quantum_matrix([[_rational(x) for x in row] for row in rows])


def element_to_json(a: QTElement) -> dict:
    out = {
        "rank": a.rank,
        "terms": [{"deg": list(d), "coef": format_rational(c)} for d, c in sorted(a.terms.items())],
    }
    if isinstance(a, OctElement):
        out["kind"] = "octonion"
    return out


def element_from_json(data) -> QTElement:
    try:
        rank = int(data["rank"])
        terms = {}
        for t in data["terms"]:
            deg = tuple(int(x) for x in t["deg"])
            terms[deg] = terms.get(deg, 0) + _rational(t["coef"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad element JSON: {exc}") from None
    cls = OctElement if data.get("kind") == "octonion" else QTElement
    return cls(rank, terms)


def lie_element_to_json(x) -> dict:
    return {
        "ell": x.ell,
        "q": quantum_matrix_to_json(x.q),
        "entries": [[element_to_json(a) for a in row] for row in x.dense()],
    }


def lie_element_from_json(data):
    from .lie_torus import LieElement

    try:
        ell = int(data["ell"])
        q = quantum_matrix_from_json(data["q"])
        rows = [[element_from_json(a) for a in row] for row in data["entries"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad Lie element JSON: {exc}") from None
    if len(rows) != ell + 1 or any(len(r) != ell + 1 for r in rows):
        raise InputError(f"entries must be a {ell + 1}x{ell + 1} array")
    return LieElement.from_rows(ell, q, rows)


def load_json(path) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)
