"""JSON reading and writing.

Frame:        {"dim": int, "vectors": [[[re, im], ...], ...], "labels": [str]?}
Hamiltonian:  {"frame": <frame>, "coeffs": [real, ...]}

Complex numbers are always [re, im] pairs. Floats go through Python's
shortest round-trip repr, so parse(dump(x)) == x bit for bit.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import InputError
from .frames import Frame
from .hamiltonian import CoefficientSequence


def _real(x, where: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InputError(f"{where}: expected a number, got {type(x).__name__}")
    x = float(x)
    if not math.isfinite(x):
        raise InputError(f"{where}: non-finite number")
    return x


def _complex(x, where: str) -> complex:
    if not isinstance(x, (list, tuple)) or len(x) != 2:
        raise InputError(f"{where}: complex numbers must be [re, im] pairs")
    return complex(_real(x[0], where + "[0]"), _real(x[1], where + "[1]"))


def frame_from_obj(obj) -> Frame:
    if not isinstance(obj, dict):
        raise InputError("frame: expected a JSON object")
    if "dim" not in obj:
        raise InputError("dim: missing field")
    dim = obj["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise InputError("dim: expected a non-negative integer")
    vecs = obj.get("vectors")
    if not isinstance(vecs, list):
        raise InputError("vectors: expected a list of vectors")
    rows = []
    for j, v in enumerate(vecs):
        if not isinstance(v, list) or len(v) != dim:
            raise InputError(f"vectors[{j}]: expected {dim} complex entries")
        rows.append([_complex(z, f"vectors[{j}][{k}]") for k, z in enumerate(v)])
    labels = obj.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != len(rows) or not all(
            isinstance(s, str) for s in labels
        ):
            raise InputError("labels: expected one string per vector")
        labels = tuple(labels)
    arr = np.array(rows, dtype=complex).reshape(len(rows), dim)
    return Frame(dim, arr, labels)


def frame_to_obj(f: Frame) -> dict:
    out = {"dim": f.dim, "vectors": [[[z.real, z.imag] for z in v.tolist()] for v in f.vectors]}
    if f.labels is not None:
        out["labels"] = list(f.labels)
    return out


def hamiltonian_from_obj(obj) -> tuple[Frame, CoefficientSequence]:
    if not isinstance(obj, dict):
        raise InputError("hamiltonian: expected a JSON object")
    if "frame" not in obj:
        raise InputError("frame: missing field")
    f = frame_from_obj(obj["frame"])
    coeffs = obj.get("coeffs")
    if not isinstance(coeffs, list):
        raise InputError("coeffs: expected a list of reals")
    vals = [_real(x, f"coeffs[{j}]") for j, x in enumerate(coeffs)]
    if len(vals) != len(f):
        raise InputError(f"coeffs: {len(vals)} values for {len(f)} vectors")
    return f, CoefficientSequence(vals)


def hamiltonian_to_obj(f: Frame, coeffs) -> dict:
    vals = coeffs.values if isinstance(coeffs, CoefficientSequence) else coeffs
    return {"frame": frame_to_obj(f), "coeffs": [float(x) for x in vals]}


def load_json(path) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc.msg} (line {exc.lineno})") from exc


def jsonable(x):
    """Convert numpy arrays, complex numbers and dataclass dicts to plain JSON types."""
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return jsonable(x.tolist())
    if isinstance(x, (complex, np.complexfloating)):
        return [float(x.real), float(x.imag)]
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    return x


def dumps(x) -> str:
    return json.dumps(jsonable(x), indent=2, allow_nan=False)
