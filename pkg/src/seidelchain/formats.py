"""Deterministic text serialization shared by the scan writer and the CLI."""

from __future__ import annotations

import json
import math

SIG_DIGITS = 12


def fmt_float(x: float) -> float:
    """Round to 12 significant digits; ``-0.0`` becomes ``0.0``."""
    if not math.isfinite(x):
        return x
    r = float(f"{x:.{SIG_DIGITS}g}")
    return 0.0 if r == 0 else r


def jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent: int | None = None) -> str:
    return json.dumps(jsonable(obj), indent=indent)


def fmt_cell(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{fmt_float(x):.{SIG_DIGITS}g}"
    return str(x)
