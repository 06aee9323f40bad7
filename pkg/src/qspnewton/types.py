"""Value types shared across the package: parity, phase-factor and coefficient vectors."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np


class InvalidInputError(ValueError):
    """Raised when an argument violates a type invariant."""


class DomainError(ValueError):
    """Raised when a point lies outside [-1, 1]."""


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @property
    def bit(self) -> int:
        return 0 if self is Parity.EVEN else 1

    @classmethod
    def of_degree(cls, d: int) -> "Parity":
        return cls.EVEN if d % 2 == 0 else cls.ODD

    @classmethod
    def parse(cls, value: "Parity | str | int") -> "Parity":
        if isinstance(value, Parity):
            return value
        if isinstance(value, str):
            try:
                return cls(value.lower())
            except ValueError:
                raise InvalidInputError(f"unknown parity {value!r}") from None
        if value in (0, 1):
            return cls.EVEN if value == 0 else cls.ODD
        raise InvalidInputError(f"unknown parity {value!r}")


def full_degree(dtilde: int, parity: Parity) -> int:
    """Degree d of the polynomial induced by ``dtilde`` reduced phases."""
    return 2 * dtilde - 2 + parity.bit


def reduced_length(d: int) -> int:
    return (d + 2) // 2


def _as_vector(values, name: str) -> np.ndarray:
    arr = np.array(values, dtype=float).reshape(-1)
    if arr.size == 0:
        raise InvalidInputError(f"{name} must be non-empty")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class ReducedPhaseFactors:
    """The independent half of a symmetric phase sequence (the solver iterate)."""

    parity: Parity
    phases: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "parity", Parity.parse(self.parity))
        object.__setattr__(self, "phases", _as_vector(self.phases, "phases"))

    @property
    def dtilde(self) -> int:
        return self.phases.size

    @property
    def degree(self) -> int:
        return full_degree(self.dtilde, self.parity)

    @classmethod
    def zeros(cls, dtilde: int, parity) -> "ReducedPhaseFactors":
        return cls(parity, np.zeros(dtilde))

    def __eq__(self, other):
        if not isinstance(other, ReducedPhaseFactors):
            return NotImplemented
        return self.parity is other.parity and np.array_equal(self.phases, other.phases)

    __hash__ = None


@dataclass(frozen=True)
class FullPhaseFactors:
    """Complete phase sequence (psi_0, ..., psi_d); ``symmetric`` marks mirrored sequences."""

    psi: np.ndarray
    symmetric: bool = field(default=False)

    def __post_init__(self):
        object.__setattr__(self, "psi", _as_vector(self.psi, "psi"))

    @property
    def degree(self) -> int:
        return self.psi.size - 1

    def __eq__(self, other):
        if not isinstance(other, FullPhaseFactors):
            return NotImplemented
        return self.symmetric == other.symmetric and np.array_equal(self.psi, other.psi)

    __hash__ = None


@dataclass(frozen=True)
class ChebyshevCoeffVector:
    """Coefficients of sum_j c_j T_{2j} (even) or sum_j c_j T_{2j+1} (odd)."""

    parity: Parity
    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "parity", Parity.parse(self.parity))
        object.__setattr__(self, "coeffs", _as_vector(self.coeffs, "coeffs"))

    @property
    def dtilde(self) -> int:
        return self.coeffs.size

    @property
    def degree(self) -> int:
        return full_degree(self.dtilde, self.parity)

    def degrees(self) -> np.ndarray:
        """Chebyshev degrees k carried by each coefficient."""
        return 2 * np.arange(self.dtilde) + self.parity.bit

    def scaled(self, factor: float) -> "ChebyshevCoeffVector":
        return ChebyshevCoeffVector(self.parity, self.coeffs * factor)

    def __eq__(self, other):
        if not isinstance(other, ChebyshevCoeffVector):
            return NotImplemented
        return self.parity is other.parity and np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None


def build_full(phi: ReducedPhaseFactors) -> FullPhaseFactors:
    """Mirror reduced phases into the symmetric full sequence.

    Even parity doubles the center phase: (p_{n-1},...,p_1, 2 p_0, p_1,...,p_{n-1}).
    Odd parity repeats it: (p_{n-1},...,p_1, p_0, p_0, p_1,...,p_{n-1}).
    """
    p = phi.phases
    tail = p[1:]
    if phi.parity is Parity.EVEN:
        center = np.array([2.0 * p[0]])
    else:
        center = np.array([p[0], p[0]])
    return FullPhaseFactors(np.concatenate([tail[::-1], center, tail]), symmetric=True)


def reduce_full(psi: FullPhaseFactors) -> ReducedPhaseFactors:
    """Inverse of :func:`build_full` for a symmetric sequence."""
    d = psi.degree
    n = reduced_length(d)
    parity = Parity.of_degree(d)
    if parity is Parity.EVEN:
        half = psi.psi[n - 1:].copy()
        half[0] = half[0] / 2.0
    else:
        half = psi.psi[n:].copy()
    return ReducedPhaseFactors(parity, half)


def shift_phase(psi: FullPhaseFactors, k: int, delta: float) -> FullPhaseFactors:
    """Copy of ``psi`` with ``psi[k] += delta``."""
    if not 0 <= k <= psi.degree:
        raise InvalidInputError(f"index {k} outside 0..{psi.degree}")
    new = psi.psi.copy()
    new[k] += delta
    # only the center entry of an odd-length sequence is its own mirror
    symmetric = psi.symmetric and (delta == 0.0 or k == psi.degree - k)
    return FullPhaseFactors(new, symmetric=symmetric)


def canonical_center(phi: ReducedPhaseFactors) -> ReducedPhaseFactors:
    """Reporting helper: wrap the even-parity center phase 2*phi_0 into [-pi, pi).

    Only the center is touched; other entries are returned raw.
    """
    if phi.parity is Parity.ODD:
        return phi
    p = phi.phases.copy()
    center = math.remainder(2.0 * p[0], 2.0 * math.pi)
    if center >= math.pi:
        center -= 2.0 * math.pi
    p[0] = center / 2.0
    return ReducedPhaseFactors(phi.parity, p)
