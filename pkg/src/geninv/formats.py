"""JSON text formats for matrices, monoids and result records."""

from __future__ import annotations

import dataclasses
import json
from pathlib import Path
from typing import Any

from .matrix import SquareMatrix
from .monoid import FiniteMonoid, TableElement, load_monoid
from .scalars import QI, PrimeField, ScalarParseError


class FormatError(ValueError):
    pass


def matrix_to_dict(m: SquareMatrix) -> dict:
    out = dict(m.domain.describe())
    out["n"] = m.n
    out["entries"] = m.entry_strings()
    return out


def matrix_from_dict(obj: dict) -> SquareMatrix:
    """Parse ``{"ring": "Qi"|"GF", "p"?, "n", "entries"}``.

    A result record (anything with a ``value`` matrix) is accepted too, so
    compute output can be fed straight back in.
    """
    if not isinstance(obj, dict):
        raise FormatError("matrix must be a JSON object")
    if "entries" not in obj and isinstance(obj.get("value"), dict):
        obj = obj["value"]
    ring = obj.get("ring")
    if ring == "Qi":
        if "p" in obj:
            raise FormatError("'p' is only allowed when ring is 'GF'")
        domain = QI
    elif ring == "GF":
        if "p" not in obj:
            raise FormatError("ring 'GF' requires 'p'")
        try:
            domain = PrimeField(int(obj["p"]))
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    else:
        raise FormatError(f"unknown ring {ring!r}; expected 'Qi' or 'GF'")
    entries = obj.get("entries")
    n = obj.get("n")
    if not isinstance(entries, list) or not isinstance(n, int) or n < 1:
        raise FormatError("'n' must be a positive integer and 'entries' a list of rows")
    if len(entries) != n or any(not isinstance(r, list) or len(r) != n for r in entries):
        raise FormatError(f"'entries' must be {n} rows of {n} scalars")
    rows = []
    for i, row in enumerate(entries):
        parsed = []
        for j, text in enumerate(row):
            if isinstance(text, int) and not isinstance(text, bool):
                text = str(text)
            if not isinstance(text, str):
                raise FormatError(f"entry ({i}, {j}) must be a string, got {text!r}")
            try:
                parsed.append(domain.parse(text))
            except ScalarParseError as exc:
                raise FormatError(f"entry ({i}, {j}): {exc}") from None
        rows.append(tuple(parsed))
    return SquareMatrix(domain, tuple(rows))


def read_json(path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None


def read_matrix(path) -> SquareMatrix:
    try:
        return matrix_from_dict(read_json(path))
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def read_monoid(path) -> FiniteMonoid:
    return load_monoid(read_json(path))


def to_jsonable(obj: Any) -> Any:
    """Recursively convert records, matrices and table elements to JSON values."""
    if isinstance(obj, SquareMatrix):
        return matrix_to_dict(obj)
    if isinstance(obj, TableElement):
        return {"id": obj.id, "label": str(obj)}
    if isinstance(obj, FiniteMonoid):
        return obj.to_dict()
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return str(obj)


def dumps(obj: Any) -> str:
    """Canonical machine form: sorted keys, two-space indent, trailing newline."""
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
