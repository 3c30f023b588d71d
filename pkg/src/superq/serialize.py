"""Deterministic JSON/CSV emission with 17-significant-digit floats.

The standard json module formats floats with the shortest round-trip
representation, which is stable but under-specified across interpreter
versions; emitting every float through a fixed '%.17g' keeps output
byte-reproducible and exactly round-trippable.
"""

from __future__ import annotations

import json
import math

__all__ = ["format_float", "dumps", "csv_text"]

_INDENT = 2


def format_float(value: float) -> str:
    """Fixed 17-significant-digit representation of a float."""
    return format(float(value), ".17g")


def _is_scalar(value) -> bool:
    return value is None or isinstance(value, (bool, int, float, str))


def _render(value, level: int) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite float {value} cannot be serialized to JSON")
        return format_float(value)
    pad = " " * (_INDENT * level)
    inner = " " * (_INDENT * (level + 1))
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f"{inner}{json.dumps(str(key))}: {_render(item, level + 1)}"
            for key, item in value.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if not len(value):
            return "[]"
        if all(_is_scalar(item) for item in value):
            return "[" + ", ".join(_render(item, level + 1) for item in value) + "]"
        items = [f"{inner}{_render(item, level + 1)}" for item in value]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps(payload) -> str:
    """Render a payload as deterministic, indented JSON (no trailing newline)."""
    return _render(payload, 0)


def _cell(value) -> str:
    if isinstance(value, bool):
        raise TypeError("booleans do not belong in CSV output")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def csv_text(header: list[str], rows: list[list]) -> str:
    """Render numeric rows under a frozen header (no trailing newline)."""
    lines = [",".join(header)]
    lines.extend(",".join(_cell(cell) for cell in row) for row in rows)
    return "\n".join(lines)
