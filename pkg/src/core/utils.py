"""
Shared utility functions.

Single-source-of-truth for the small parsing/formatting helpers used by
the CLI, the dataset emitter and the verification report.
"""

import json
import math
from typing import Any

import numpy as np

from src.core.errors import UsageError


def parse_complex(text: str) -> complex:
    """Parse a CLI complex literal written as ``re,im`` (or a bare real).

    Examples:
        >>> parse_complex("0.5,0.2")
        (0.5+0.2j)
        >>> parse_complex("0.5")
        (0.5+0j)
    """
    parts = [p.strip() for p in str(text).split(",")]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError as e:
        raise UsageError(f"Cannot parse complex value {text!r}: {e}") from e
    raise UsageError(f"Expected 're,im', got {text!r}")


def format_float(value: float) -> str:
    """17 significant digits: round-trip safe and stable across runs.

    Non-finite values use the NaN/Infinity spellings that `json.loads` accepts.

    Examples:
        >>> format_float(0.1)
        '0.10000000000000001'
        >>> format_float(10.0)
        '10.0'
    """
    if math.isnan(value):
        return "NaN"
    if math.isinf(value):
        return "Infinity" if value > 0 else "-Infinity"
    text = format(value, ".17g")
    return text if "." in text or "e" in text else text + ".0"


def dumps_json(obj: Any, indent: int = 2, sort_keys: bool = False) -> str:
    """json.dumps with every float written by `format_float`."""
    return _encode(obj, indent, 0, sort_keys)


def _encode(obj: Any, indent: int, level: int, sort_keys: bool) -> str:
    if isinstance(obj, np.generic):
        obj = obj.item()
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    pad = "\n" + " " * (indent * (level + 1))
    close = "\n" + " " * (indent * level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = sorted(obj.items(), key=lambda kv: str(kv[0])) if sort_keys else obj.items()
        body = ",".join(f"{pad}{json.dumps(str(k))}: {_encode(v, indent, level + 1, sort_keys)}" for k, v in items)
        return "{" + body + close + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        body = ",".join(pad + _encode(v, indent, level + 1, sort_keys) for v in obj)
        return "[" + body + close + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__} to JSON")
