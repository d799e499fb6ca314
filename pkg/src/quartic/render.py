"""Deterministic text rendering for the CLI.

Identical inputs must produce byte-identical output, so floats are printed
through one fixed 17-significant-digit format (enough to round-trip any
double) and JSON documents keep their keys in insertion order instead of
relying on library serialization details.
"""

from __future__ import annotations

import json

__all__ = ["format_float", "render_json", "render_csv"]


def format_float(value: float) -> str:
    return format(float(value), ".17g")


def _render(obj, out: list, indent: int, level: int) -> None:
    pad = " " * (indent * (level + 1))
    close_pad = " " * (indent * level)
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(format_float(obj))
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, value) in enumerate(obj.items()):
            if not isinstance(key, str):
                raise TypeError(f"JSON keys must be strings, got {key!r}")
            out.append(f"{pad}{json.dumps(key)}: ")
            _render(value, out, indent, level + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(f"{close_pad}}}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        flat = all(
            isinstance(v, (int, float, str, bool, type(None))) for v in obj
        )
        if flat:
            parts = []
            for v in obj:
                sub: list = []
                _render(v, sub, indent, level)
                parts.append("".join(sub))
            out.append("[" + ", ".join(parts) + "]")
            return
        out.append("[\n")
        for i, value in enumerate(obj):
            out.append(pad)
            _render(value, out, indent, level + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(f"{close_pad}]")
    else:
        raise TypeError(f"cannot render {type(obj).__name__} as JSON")


def render_json(obj, indent: int = 2) -> str:
    """One JSON document, keys in insertion order, floats at 17 digits."""
    out: list = []
    _render(obj, out, indent, 0)
    return "".join(out)


def _csv_field(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def render_csv(header, rows) -> str:
    """Comma-separated table with a header row and a trailing newline."""
    lines = [",".join(header)]
    lines.extend(",".join(_csv_field(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"
