"""Target polynomials: Jacobi-Anger (cos/sin), Gaussian filter, coefficient files."""

from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .chebyshev import coefficients_from_samples, infinity_norm, sample_grid
from .types import ChebyshevCoeffVector, InvalidInputError, Parity

KINDS = ("cos", "sin", "gaussian", "file")


class NormWarning(UserWarning):
    """The target exceeds 1 in sup-norm; no QSP phases exist for it."""


def bessel_j_sequence(k_max: int, tau: float) -> np.ndarray:
    """J_0(tau), ..., J_{k_max}(tau) by Miller's downward recurrence.

    The recurrence J_{k-1} = (2k/tau) J_k - J_{k+1} is run from well above
    max(k_max, tau), then normalized with J_0 + 2 sum_k J_{2k} = 1.
    """
    if k_max < 0 or tau < 0:
        raise InvalidInputError("need k_max >= 0 and tau >= 0")
    out = np.zeros(k_max + 1)
    if tau == 0.0:
        out[0] = 1.0
        return out
    m = max(k_max, math.ceil(tau))
    start = m + int(math.sqrt(160.0 * m)) + 20
    start += start % 2
    vals = np.zeros(start + 2)
    vals[start] = 1e-30
    for k in range(start, 0, -1):
        vals[k - 1] = (2.0 * k / tau) * vals[k] - vals[k + 1]
        if abs(vals[k - 1]) > 1e250:
            vals[k - 1 :] *= 1e-250
    norm = vals[0] + 2.0 * np.sum(vals[2:start + 1:2])
    return vals[: k_max + 1] / norm


def truncation_degree(tau: float, eps0: float, parity: Parity) -> int:
    """Smallest degree of the given parity that is >= e|tau|/2 + ln(1/eps0)."""
    if not 0.0 < eps0 < 1.0:
        raise InvalidInputError("eps0 must lie in (0, 1)")
    d = math.ceil(math.e * abs(tau) / 2.0 + math.log(1.0 / eps0))
    if d % 2 != parity.bit:
        d += 1
    return d


def _trim(coeffs: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(coeffs)
    return coeffs[: nz[-1] + 1] if nz.size else coeffs[:1]


def jacobi_anger_cos(tau: float, eps0: float = 1e-14, alpha: Optional[float] = None):
    """Even coefficients of cos(tau x) ~ J_0 + 2 sum_j (-1)^j J_{2j}(tau) T_{2j}(x).

    Exactly-zero trailing terms are dropped (so tau = 0 gives a constant).
    With ``alpha`` the result is rescaled to sup-norm alpha.
    """
    d = truncation_degree(tau, eps0, Parity.EVEN)
    j = bessel_j_sequence(d, tau)[0::2]
    c = 2.0 * j * (-1.0) ** np.arange(j.size)
    c[0] = j[0]
    out = ChebyshevCoeffVector(Parity.EVEN, _trim(c))
    return out if alpha is None else rescale_to_norm(out, alpha)


def jacobi_anger_sin(tau: float, eps0: float = 1e-14, alpha: Optional[float] = None):
    """Odd coefficients of sin(tau x) ~ 2 sum_j (-1)^j J_{2j+1}(tau) T_{2j+1}(x)."""
    d = truncation_degree(tau, eps0, Parity.ODD)
    j = bessel_j_sequence(d, tau)[1::2]
    c = 2.0 * j * (-1.0) ** np.arange(j.size)
    out = ChebyshevCoeffVector(Parity.ODD, _trim(c))
    return out if alpha is None else rescale_to_norm(out, alpha)


def gaussian(x, mu: float, sigma: float):
    return np.exp(-((np.abs(x) - mu) ** 2) / sigma**2)


def gaussian_coeffs(mu: float, sigma: float, degree: int, alpha: Optional[float] = None):
    """Even interpolant of exp(-(|x| - mu)^2 / sigma^2) on the sample grid of ``degree``."""
    if sigma <= 0:
        raise InvalidInputError("sigma must be positive")
    if degree < 2 or degree % 2:
        raise InvalidInputError("degree must be even and >= 2")
    c = coefficients_from_samples(gaussian(sample_grid(degree), mu, sigma), Parity.EVEN)
    return c if alpha is None else rescale_to_norm(c, alpha)


def rescale_to_norm(c: ChebyshevCoeffVector, alpha: float) -> ChebyshevCoeffVector:
    """c * alpha / ||f||_inf."""
    if not 0.0 < alpha <= 1.0:
        raise InvalidInputError("alpha must lie in (0, 1]")
    norm = infinity_norm(c)
    if norm == 0.0:
        raise InvalidInputError("cannot rescale the zero polynomial")
    return c.scaled(alpha / norm)


def check_norm(c: ChebyshevCoeffVector) -> bool:
    """True when ||f||_inf <= 1; warns otherwise."""
    norm = infinity_norm(c)
    if norm > 1.0:
        warnings.warn(f"target sup-norm {norm:.6g} exceeds 1", NormWarning, stacklevel=2)
        return False
    return True


@dataclass
class TargetSpec:
    kind: str
    tau: Optional[float] = None
    mu: Optional[float] = None
    sigma: Optional[float] = None
    degree: Optional[int] = None
    path: Optional[str] = None
    scale: Optional[float] = None
    eps0: float = 1e-14

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInputError(f"unknown target kind {self.kind!r}")
        if self.kind in ("cos", "sin"):
            if self.tau is None or self.tau < 0:
                raise InvalidInputError(f"{self.kind} target needs tau >= 0")
        elif self.kind == "gaussian":
            if self.mu is None or self.sigma is None or self.degree is None:
                raise InvalidInputError("gaussian target needs mu, sigma and degree")
            if self.sigma <= 0:
                raise InvalidInputError("sigma must be positive")
        elif self.path is None:
            raise InvalidInputError("file target needs a path")
        if self.scale is not None and not 0.0 < self.scale <= 1.0:
            raise InvalidInputError("scale must lie in (0, 1]")

    def label(self) -> str:
        """Compact exact name, e.g. ``cos:tau=100.0``; inverted by :meth:`from_label`."""
        if self.kind in ("cos", "sin"):
            return f"{self.kind}:tau={float(self.tau)!r}"
        if self.kind == "gaussian":
            return f"gaussian:mu={float(self.mu)!r}:sigma={float(self.sigma)!r}"
        return f"file:{self.path}"

    @classmethod
    def from_label(cls, label: str, **extra) -> "TargetSpec":
        kind, _, rest = label.partition(":")
        if kind == "file":
            return cls(kind, path=rest, **extra)
        fields = {}
        for part in rest.split(":"):
            key, eq, value = part.partition("=")
            if not eq or key not in ("tau", "mu", "sigma"):
                raise InvalidInputError(f"bad target label {label!r}")
            fields[key] = float(value)
        return cls(kind, **fields, **extra)

    def to_dict(self) -> dict:
        return asdict(self)


def build_target(spec: TargetSpec) -> ChebyshevCoeffVector:
    """Coefficient vector for ``spec``; a file target is rescaled only if ``scale`` is set."""
    if spec.kind == "cos":
        return jacobi_anger_cos(spec.tau, spec.eps0, spec.scale)
    if spec.kind == "sin":
        return jacobi_anger_sin(spec.tau, spec.eps0, spec.scale)
    if spec.kind == "gaussian":
        return gaussian_coeffs(spec.mu, spec.sigma, spec.degree, spec.scale)
    from .io import load_coeffs

    c = load_coeffs(spec.path)
    if spec.scale is not None and np.any(c.coeffs):
        c = rescale_to_norm(c, spec.scale)
    return c
