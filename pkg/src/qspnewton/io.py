"""JSON files for coefficient and phase vectors.

Schemas::

    {"parity": "even" | "odd", "coeffs": [float, ...]}
    {"parity": "even" | "odd", "reduced_phases": [float, ...]}

Floats are written with 17 significant digits so doubles round-trip exactly.
An optional integer ``degree`` is accepted on input and checked against the
vector length.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .targets import check_norm
from .types import ChebyshevCoeffVector, InvalidInputError, Parity, ReducedPhaseFactors, full_degree


class SchemaError(InvalidInputError):
    """A file does not follow the coefficient/phase schema."""


def format_float(v: float) -> str:
    if not math.isfinite(v):
        raise SchemaError(f"non-finite value {v!r}")
    text = format(float(v), ".17g")
    # "-0" or "3" would parse back as JSON integers (and lose the sign of -0.0)
    return text if any(ch in text for ch in ".en") else text + ".0"


def _dump(path, parity: Parity, key: str, values: np.ndarray) -> None:
    body = ", ".join(format_float(v) for v in values)
    text = f'{{"parity": "{parity.value}", "{key}": [{body}]}}\n'
    Path(path).write_text(text, encoding="utf-8")


def _load(path, key: str):
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(raw, dict):
        raise SchemaError(f"{path}: expected a JSON object")
    for name in ("parity", key):
        if name not in raw:
            raise SchemaError(f"{path}: missing field {name!r}")
    if raw["parity"] not in ("even", "odd"):
        raise SchemaError(f"{path}: parity must be 'even' or 'odd'")
    values = raw[key]
    if (
        not isinstance(values, list)
        or not values
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in values)
    ):
        raise SchemaError(f"{path}: {key!r} must be a non-empty list of numbers")
    parity = Parity(raw["parity"])
    arr = np.array(values, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise SchemaError(f"{path}: non-finite entries")
    if "degree" in raw and raw["degree"] != full_degree(arr.size, parity):
        raise SchemaError(
            f"{path}: degree {raw['degree']} inconsistent with {arr.size} {parity.value} entries"
        )
    return parity, arr


def save_coeffs(path, c: ChebyshevCoeffVector) -> None:
    _dump(path, c.parity, "coeffs", c.coeffs)


def load_coeffs(path) -> ChebyshevCoeffVector:
    """Read a coefficient file; a sup-norm above 1 is accepted with a :class:`NormWarning`."""
    parity, arr = _load(path, "coeffs")
    c = ChebyshevCoeffVector(parity, arr)
    check_norm(c)
    return c


def save_phases(path, phi: ReducedPhaseFactors) -> None:
    _dump(path, phi.parity, "reduced_phases", phi.phases)


def load_phases(path) -> ReducedPhaseFactors:
    parity, arr = _load(path, "reduced_phases")
    return ReducedPhaseFactors(parity, arr)
