"""
File formats and number formatting shared by the CLI and the tests.

Every file is JSON. Floats are written with 17 significant digits so a
value read back is the same double that was written.

    matrix      {"rows": r, "cols": c, "re": [[...]], "im": [[...]]}
    density     a matrix object
    POVM        {"effects": [matrix, ...]}
    fiducial    {"d": d, "re": [...], "im": [...]}
    SIC         {"fiducial": {...}, "sic_error": e}   (a bare fiducial also loads)
    ProbState   {"p": [...]}                          (OutcomeDist uses the same shape)
    CondMatrix  {"J": J, "N": N, "R": [[...]]}
    states      {"states": [[...], ...]}
    samples     {"samples": [{"vector": [...], "value": v}, ...]}
    prices      {"prices": {"E": 0.3, "¬E": 0.7}}
    CountTable  {"labels": [...], "counts": [...], "total": n, "seed": s}

Readers raise FileFormatError naming the path and the offending field.
"""

from __future__ import annotations

import json
import logging
import math
import os
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

import numpy as np
import pandas as pd

from errors import FileFormatError

logger = logging.getLogger(__name__)

FLOAT_FORMAT = ".17g"
T = TypeVar("T")


# ----------------------------------------------------------------------
# Writing
# ----------------------------------------------------------------------
def clean_data_for_json(data):
    """
    Recursively cleans data to make it JSON serializable.
    Converts numpy types to native Python types.
    """
    if isinstance(data, dict):
        return {str(k): clean_data_for_json(v) for k, v in data.items()}
    elif isinstance(data, (list, tuple)):
        return [clean_data_for_json(i) for i in data]
    elif isinstance(data, np.bool_):
        return bool(data)
    elif isinstance(data, np.integer):
        return int(data)
    elif isinstance(data, np.floating):
        return float(data)
    elif isinstance(data, np.ndarray):
        return clean_data_for_json(data.tolist())
    elif isinstance(data, pd.DataFrame):
        return clean_data_for_json(data.to_dict(orient="records"))
    return data


def format_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, FLOAT_FORMAT)


def _encode(obj, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    close = " " * (indent * level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_encode(v, indent, level + 1)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        # Numeric rows stay on one line
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in obj) + "]"
        items = [pad + _encode(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + close + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj: Any, indent: int = 2) -> str:
    """JSON text with every float at 17 significant digits."""
    return _encode(clean_data_for_json(obj), indent, 0) + "\n"


def write_json(obj: Any, path: str) -> str:
    text = dumps(obj)
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as e:
        raise FileFormatError(f"cannot write {path}: {e}", path=path) from e
    logger.debug("Wrote %s", path)
    return text


# ----------------------------------------------------------------------
# Reading
# ----------------------------------------------------------------------
def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError as e:
        raise FileFormatError(f"{path}: file not found", path=path) from e
    except (OSError, UnicodeDecodeError) as e:
        raise FileFormatError(f"{path}: cannot read ({e})", path=path) from e
    except json.JSONDecodeError as e:
        raise FileFormatError(f"{path}: not valid JSON ({e.msg} at line {e.lineno})", path=path) from e


def read_file(path: str, reader: Callable[[Any], T]) -> T:
    """Load ``path`` and hand the parsed JSON to ``reader``; format errors carry the path."""
    data = load_json(path)
    try:
        return reader(data)
    except FileFormatError as e:
        if e.path is not None:
            raise
        raise FileFormatError(f"{path}: {e}", path=path, field=e.field) from e


def require_field(data: Any, key: str) -> Any:
    if not isinstance(data, dict):
        raise FileFormatError(f"expected a JSON object holding {key!r}", field=key)
    if key not in data:
        raise FileFormatError(f"missing field {key!r}", field=key)
    return data[key]


def _numeric_array(value: Any, key: str) -> np.ndarray:
    try:
        arr = np.array(value, dtype=float)
    except (TypeError, ValueError) as e:
        raise FileFormatError(f"field {key!r} is not numeric ({e})", field=key) from e
    if not np.all(np.isfinite(arr)):
        raise FileFormatError(f"field {key!r} has NaN or infinite entries", field=key)
    return arr


def require_vector(data: Any, key: str, length: Optional[int] = None) -> np.ndarray:
    arr = _numeric_array(require_field(data, key), key)
    if arr.ndim != 1 or arr.size == 0:
        raise FileFormatError(f"field {key!r} must be a non-empty list of numbers", field=key)
    if length is not None and arr.size != length:
        raise FileFormatError(f"field {key!r} has {arr.size} entries, expected {length}", field=key)
    return arr


def require_int(data: Any, key: str) -> int:
    value = require_field(data, key)
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not float(value).is_integer():
        raise FileFormatError(f"field {key!r} must be an integer, got {value!r}", field=key)
    return int(value)


def require_int_vector(data: Any, key: str) -> np.ndarray:
    arr = require_vector(data, key)
    if not np.all(arr == np.round(arr)):
        raise FileFormatError(f"field {key!r} must be a list of integers", field=key)
    return arr.astype(np.int64)


def require_matrix(data: Any, key: str, shape: Optional[Tuple[int, int]] = None) -> np.ndarray:
    arr = _numeric_array(require_field(data, key), key)
    if arr.ndim != 2 or arr.size == 0:
        raise FileFormatError(f"field {key!r} must be a non-empty list of equal-length rows", field=key)
    if shape is not None and arr.shape != tuple(shape):
        raise FileFormatError(f"field {key!r} has shape {arr.shape}, expected {tuple(shape)}", field=key)
    return arr


# ----------------------------------------------------------------------
# Matrices and POVMs
# ----------------------------------------------------------------------
def matrix_to_json(m) -> Dict:
    a = np.asarray(m, dtype=np.complex128)
    return {"rows": a.shape[0], "cols": a.shape[1], "re": a.real.tolist(), "im": a.imag.tolist()}


def matrix_from_json(data: Any) -> np.ndarray:
    rows = require_int(data, "rows")
    cols = require_int(data, "cols")
    re = require_matrix(data, "re", shape=(rows, cols))
    im = require_matrix(data, "im", shape=(rows, cols))
    return re + 1j * im


def povm_to_json(effects: Sequence) -> Dict:
    return {"effects": [matrix_to_json(e) for e in effects]}


def povm_from_json(data: Any) -> List[np.ndarray]:
    items = require_field(data, "effects")
    if not isinstance(items, list) or not items:
        raise FileFormatError("field 'effects' must be a non-empty list of matrices", field="effects")
    effects = []
    for k, item in enumerate(items):
        try:
            effects.append(matrix_from_json(item))
        except FileFormatError as e:
            raise FileFormatError(f"effects[{k}]: {e}", field=f"effects[{k}].{e.field}") from e
    return effects


# ----------------------------------------------------------------------
# Probability-vector collections
# ----------------------------------------------------------------------
def states_from_json(data: Any) -> List[np.ndarray]:
    rows = require_field(data, "states")
    if not isinstance(rows, list):
        raise FileFormatError("field 'states' must be a list of vectors", field="states")
    return [require_vector({"states": row}, "states") for row in rows]


def samples_from_json(data: Any) -> List[Tuple[np.ndarray, float]]:
    items = require_field(data, "samples")
    if not isinstance(items, list):
        raise FileFormatError("field 'samples' must be a list", field="samples")
    samples = []
    for k, item in enumerate(items):
        try:
            vector = require_vector(item, "vector")
            value = _numeric_array(require_field(item, "value"), "value")
        except FileFormatError as e:
            raise FileFormatError(f"samples[{k}]: {e}", field=f"samples[{k}].{e.field}") from e
        if value.ndim != 0:
            raise FileFormatError(f"samples[{k}]: 'value' must be a number", field=f"samples[{k}].value")
        samples.append((vector, float(value)))
    return samples


def prices_from_json(data: Any) -> Dict[str, float]:
    prices = require_field(data, "prices")
    if not isinstance(prices, dict):
        raise FileFormatError("field 'prices' must map events to numbers", field="prices")
    out = {}
    for event, value in prices.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise FileFormatError(f"price of {event!r} is not a number", field=f"prices.{event}")
        if not math.isfinite(value):
            raise FileFormatError(f"price of {event!r} is not finite: {value!r}", field=f"prices.{event}")
        out[str(event)] = float(value)
    return out
