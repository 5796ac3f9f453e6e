"""Deterministic JSON for matrices, vectors, and experiment reports.

Output contract: reals are printed with 17 significant digits (exact
double round-trip), complex matrices as row-major arrays of [re, im]
pairs, object keys sorted — so the same data always serializes to the
same bytes.  Parsing is strict and reports the offending file/field in
ParseError.
"""

from __future__ import annotations

import json
from numbers import Integral, Real

import numpy as np

from .errors import ParseError, ValidationError

__all__ = [
    "to_jsonable",
    "dumps_canonical",
    "dump_canonical",
    "load_json",
    "parse_real_vector",
    "parse_complex_matrix",
    "read_vector_file",
    "read_matrix_file",
]


def _float_token(x: float) -> str:
    x = float(x)
    if not np.isfinite(x):
        raise ValidationError(f"cannot serialize non-finite value {x!r}")
    return format(x, ".17g")


def to_jsonable(obj):
    """Normalize numpy/complex payloads to plain JSON-ready structures.

    Complex arrays and scalars become [re, im] pairs (row-major for
    matrices); real arrays become nested lists; numpy scalars become
    Python scalars.  Dicts and sequences are walked recursively.
    """
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        if np.iscomplexobj(obj):
            return _complex_array(obj)
        return obj.tolist()
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, Integral):
        return int(obj)
    if isinstance(obj, Real):
        return float(obj)
    if obj is None or isinstance(obj, str):
        return obj
    raise ValidationError(f"cannot serialize object of type {type(obj).__name__}")


def _complex_array(arr: np.ndarray):
    if arr.ndim == 0:
        z = complex(arr)
        return [z.real, z.imag]
    return [_complex_array(sub) for sub in arr]


def _encode(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, Integral):
        return str(int(obj))
    if isinstance(obj, Real):
        return _float_token(obj)
    if isinstance(obj, dict):
        items = (
            f"{json.dumps(str(k))}: {_encode(v)}"
            for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))
        )
        return "{" + ", ".join(items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    raise ValidationError(f"cannot encode object of type {type(obj).__name__}")


def dumps_canonical(obj) -> str:
    """Serialize to the canonical JSON text (sorted keys, 17-digit reals)."""
    return _encode(to_jsonable(obj)) + "\n"


def dump_canonical(obj, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps_canonical(obj))


def load_json(path: str):
    """Load a JSON file, wrapping syntax errors in ParseError with context."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def parse_real_vector(data, where: str = "vector") -> np.ndarray:
    """Parse a JSON array of reals into a float vector."""
    if not isinstance(data, list) or len(data) == 0:
        raise ParseError(f"{where}: expected a nonempty JSON array of numbers")
    out = np.empty(len(data))
    for i, v in enumerate(data):
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ParseError(f"{where}[{i}]: expected a number, got {v!r}")
        out[i] = float(v)
    return out


def _parse_entry(v, where: str) -> complex:
    if isinstance(v, bool):
        raise ParseError(f"{where}: expected a number or [re, im] pair, got {v!r}")
    if isinstance(v, (int, float)):
        return complex(float(v), 0.0)
    if (
        isinstance(v, list)
        and len(v) == 2
        and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in v)
    ):
        return complex(float(v[0]), float(v[1]))
    raise ParseError(f"{where}: expected a number or [re, im] pair, got {v!r}")


def parse_complex_matrix(data, where: str = "matrix") -> np.ndarray:
    """Parse a row-major JSON matrix whose entries are reals or [re, im]."""
    if not isinstance(data, list) or len(data) == 0:
        raise ParseError(f"{where}: expected a nonempty JSON array of rows")
    rows = []
    width = None
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) == 0:
            raise ParseError(f"{where}[{i}]: expected a nonempty row array")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(
                f"{where}[{i}]: row has {len(row)} entries, expected {width}"
            )
        rows.append([_parse_entry(v, f"{where}[{i}][{j}]") for j, v in enumerate(row)])
    return np.array(rows, dtype=complex)


def read_vector_file(path: str) -> np.ndarray:
    return parse_real_vector(load_json(path), where=path)


def read_matrix_file(path: str) -> np.ndarray:
    return parse_complex_matrix(load_json(path), where=path)
