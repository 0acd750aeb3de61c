"""Deterministic JSON and CSV rendering of command payloads.

Real values are rendered as strings with 17 significant digits, exact values
as fraction strings, so identical invocations give byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Sequence
from fractions import Fraction
from typing import Any

SIGNIFICANT_DIGITS = 17


def format_real(value: float, digits: int = SIGNIFICANT_DIGITS) -> str:
    """Fixed-precision decimal string for a float."""
    return format(float(value), f".{digits}g")


def format_scalar(value: Any, digits: int = SIGNIFICANT_DIGITS) -> str:
    """Fraction string when exact, fixed-precision decimal otherwise."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_real(value, digits)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(format_scalar(v, digits) for v in value) + "]"
    return str(value)


def render_json(payload: Any) -> str:
    """Indented JSON, keys kept in insertion order."""
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def render_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """CSV with a header row and Unix line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()
