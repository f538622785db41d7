"""Rendering reports as JSON, CSV or plain text.

Integers (other than booleans) are written as decimal strings and fractions as
"p/q", so counts far beyond 64 bits survive any consumer. Dataclass fields keep
their declaration order; dict keys keep insertion order.
"""
from __future__ import annotations

import csv
import dataclasses
import io
import json
import sys
from fractions import Fraction

import numpy as np


def allow_big_ints() -> None:
    # decimal output of counts with more than 4300 digits
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


def to_plain(obj):
    """Recursively convert a report into JSON-ready values."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        out = {}
        for f in dataclasses.fields(obj):
            if f.name.startswith("_"):
                continue
            val = getattr(obj, f.name)
            if callable(val):
                continue
            out[f.name] = to_plain(val)
        return out
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_plain(x) for x in items]
    raise TypeError(f"cannot render {type(obj).__name__}")


def _cell(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(",", ":"))
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _rows(plain) -> list[dict]:
    if plain in (None, {}, []):
        return []
    if isinstance(plain, dict):
        return [plain]
    if isinstance(plain, list) and all(isinstance(r, dict) for r in plain):
        return plain
    return [{"value": v} for v in (plain if isinstance(plain, list) else [plain])]


def emit_report(report, fmt: str = "json") -> str:
    """Render a report; an empty report gives an empty but valid document."""
    allow_big_ints()
    plain = to_plain(report)
    if fmt == "json":
        if plain is None:
            plain = {}
        return json.dumps(plain, indent=2) + "\n"
    rows = _rows(plain)
    if fmt == "csv":
        if not rows:
            return ""
        header = list(rows[0])
        for r in rows[1:]:
            header += [k for k in r if k not in header]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([_cell(r.get(h)) for h in header])
        return buf.getvalue()
    if fmt == "plain":
        lines = []
        for i, r in enumerate(rows):
            if i:
                lines.append("")
            lines += [f"{k}: {_cell(v)}" for k, v in r.items()]
        return "\n".join(lines) + ("\n" if lines else "")
    raise ValueError(f"unknown format {fmt!r}")
