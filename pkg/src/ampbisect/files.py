"""State files and report serialization.

State file (JSON text)::

    {"num_qubits": 2, "amplitudes": [0.5, 0.5, 0.5, 0.5]}
    {"num_qubits": 2, "angles": [0.5235987755982988, 1.0471975511965976]}

Exactly one of ``amplitudes`` / ``angles`` is present; ``angles`` builds
the product state with one angle per qubit. Numbers are written with 17
significant digits, which round-trips IEEE doubles exactly.
"""
from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import Iterable, Sequence, TextIO

import numpy as np

from .generators import generate_frqi_state
from .statevector import QuantumState, prepare_from_amplitudes

SCHEMA_VERSION = 1


def format_number(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def dumps(value) -> str:
    """JSON text with floats at 17 significant digits and keys in insertion order."""
    if value is None:
        return "null"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple, np.ndarray)):
        return "[" + ", ".join(dumps(v) for v in value) + "]"
    return format_number(value)


class StateFileError(ValueError):
    pass


def parse_state(doc: dict) -> QuantumState:
    if not isinstance(doc, dict) or "num_qubits" not in doc:
        raise StateFileError("state document needs a num_qubits field")
    has_amps, has_angles = "amplitudes" in doc, "angles" in doc
    if has_amps == has_angles:
        raise StateFileError("state document needs exactly one of 'amplitudes' or 'angles'")
    n = doc["num_qubits"]
    if not isinstance(n, int) or n < 1:
        raise StateFileError(f"num_qubits must be a positive integer, got {n!r}")
    if has_amps:
        psi = prepare_from_amplitudes(doc["amplitudes"])
    else:
        if len(doc["angles"]) != n:
            raise StateFileError(f"expected {n} angles, got {len(doc['angles'])}")
        psi = generate_frqi_state(doc["angles"])
    if psi.num_qubits != n:
        raise StateFileError(f"num_qubits={n} but amplitudes describe {psi.num_qubits} qubits")
    return psi


def load_state(path) -> QuantumState:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise StateFileError(f"{path}: not a valid state document ({exc})") from exc
    return parse_state(doc)


def state_document(psi: QuantumState | None = None, angles: Sequence[float] | None = None) -> str:
    if (psi is None) == (angles is None):
        raise ValueError("give exactly one of psi or angles")
    if psi is not None:
        return dumps({"num_qubits": psi.num_qubits, "amplitudes": psi.amplitudes}) + "\n"
    return dumps({"num_qubits": len(angles), "angles": list(angles)}) + "\n"


def save_state(path, psi: QuantumState | None = None, angles: Sequence[float] | None = None) -> None:
    Path(path).write_text(state_document(psi, angles))


def load_angles(path) -> list[float]:
    """Angles from a JSON list, a state document with ``angles``, or whitespace/comma separated text."""
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        return [float(tok) for tok in text.replace(",", " ").split()]
    if isinstance(doc, dict):
        if "angles" not in doc:
            raise StateFileError(f"{path}: no 'angles' field")
        doc = doc["angles"]
    if not isinstance(doc, list):
        raise StateFileError(f"{path}: expected a list of angles")
    return [float(t) for t in doc]


def write_jsonl(records: Iterable[dict], out: TextIO) -> None:
    for rec in records:
        out.write(dumps(rec) + "\n")


def write_csv(records: Iterable[dict], columns: Sequence[str], out: TextIO) -> None:
    """CSV with a header row and the given fixed column order."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for rec in records:
        row = []
        for c in columns:
            v = rec.get(c)
            row.append("" if v is None else v if isinstance(v, str) else format_number(v))
        writer.writerow(row)
