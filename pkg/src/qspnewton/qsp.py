"""Evaluation of the QSP unitary and of g(x, phases) = Im <0|U|0>.

Two kernels are provided.  The complex one multiplies 2x2 SU(2) factors
and works for any phase sequence.  The real one is restricted to symmetric
sequences: it tracks the triple (Re P, Im P, sqrt(1-x^2) Q), which moves on
the unit sphere under interleaved SO(3) rotations, and costs roughly half as
many multiplications.

All evaluators are vectorized over ``x``: a scalar gives a scalar (or a 2x2
matrix), an array gives an array of the same shape.
"""

from __future__ import annotations

import math

import numpy as np

from .types import DomainError, FullPhaseFactors, Parity, ReducedPhaseFactors, build_full


def _check_domain(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0) or np.any(np.isnan(x)):
        raise DomainError("x must lie in [-1, 1]")
    return x


def _sqrt1m(x: np.ndarray) -> np.ndarray:
    return np.sqrt((1.0 - x) * (1.0 + x))


def _square_exact(a: np.ndarray):
    """a*a as an unevaluated sum hi + lo (Dekker)."""
    c = 134217729.0 * a
    ah = c - (c - a)
    al = a - ah
    p = a * a
    return p, ((ah * ah - p) + 2.0 * ah * al) + al * al


def unit_defect(x: np.ndarray, s: np.ndarray) -> np.ndarray:
    """x^2 + s^2 - 1 evaluated without cancellation error."""
    p1, e1 = _square_exact(x)
    p2, e2 = _square_exact(s)
    t = p1 + p2
    bp = t - p1
    et = (p1 - (t - bp)) + (p2 - bp)
    return (t - 1.0) + (et + e1 + e2)


def _unwrap(arr: np.ndarray, scalar: bool):
    return arr[()] if scalar else arr


def w_matrix(x: float) -> np.ndarray:
    """Signal operator exp(i arccos(x) X) = [[x, i s], [i s, x]], s = sqrt(1-x^2)."""
    x = float(_check_domain(x))
    s = _sqrt1m(np.float64(x))
    return np.array([[x, 1j * s], [1j * s, x]])


def w_inverse(x: float) -> np.ndarray:
    """Closed-form inverse (conjugate transpose) of :func:`w_matrix`."""
    return w_matrix(x).conj().T


def z_phase(phi: float) -> np.ndarray:
    return np.diag([np.exp(1j * phi), np.exp(-1j * phi)])


def _as_full(phases) -> FullPhaseFactors:
    if isinstance(phases, ReducedPhaseFactors):
        return build_full(phases)
    if isinstance(phases, FullPhaseFactors):
        return phases
    return FullPhaseFactors(phases)


def _u_entries(x: np.ndarray, psi: np.ndarray):
    """Entries (u00, u01, u10, u11) of U(x, psi), each shaped like x."""
    s = 1j * _sqrt1m(x)
    e = np.exp(1j * psi)
    ones = np.ones(x.shape, dtype=complex)
    u00, u01 = ones * e[0], np.zeros(x.shape, dtype=complex)
    u10, u11 = np.zeros(x.shape, dtype=complex), ones * e[0].conjugate()
    for ej in e[1:]:
        # U <- U W(x) diag(e^{i psi_j}, e^{-i psi_j})
        u00, u01 = (u00 * x + u01 * s) * ej, (u00 * s + u01 * x) * ej.conjugate()
        u10, u11 = (u10 * x + u11 * s) * ej, (u10 * s + u11 * x) * ej.conjugate()
    return u00, u01, u10, u11


def _determinant_correction(x: np.ndarray, d: int) -> np.ndarray:
    # the rounded W has det x^2 + s^2 = 1 + delta; the product picks up (1 + delta)^d
    delta = unit_defect(x, _sqrt1m(x))
    return np.exp(-0.5 * d * np.log1p(delta))


def evaluate_u(x, phases) -> np.ndarray:
    """U(x, psi) = e^{i psi_0 Z} prod_j [W(x) e^{i psi_j Z}].

    Returns shape ``x.shape + (2, 2)``.
    """
    x = _check_domain(x)
    psi = _as_full(phases).psi
    scale = _determinant_correction(x, psi.size - 1)
    u00, u01, u10, u11 = (u * scale for u in _u_entries(x, psi))
    return np.stack([np.stack([u00, u01], -1), np.stack([u10, u11], -1)], -2)


def evaluate_g_complex(x, phases):
    """g(x, psi) = Im <0|U(x, psi)|0> via SU(2) products.

    ``phases`` may be reduced (mirrored first) or a full, possibly
    non-symmetric, sequence.
    """
    xa = _check_domain(x)
    psi = _as_full(phases).psi
    u00 = _u_entries(xa, psi)[0]
    g = u00.imag * _determinant_correction(xa, psi.size - 1)
    return _unwrap(g, xa.ndim == 0)


def so3_rz(phi: float) -> np.ndarray:
    """R_z(2 phi)."""
    c, s = math.cos(2.0 * phi), math.sin(2.0 * phi)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def so3_rx(x: float) -> np.ndarray:
    """R_x(2 arccos x), entries from the double-angle identities."""
    x = float(_check_domain(x))
    c = 2.0 * x * x - 1.0
    s = 2.0 * x * float(_sqrt1m(np.float64(x)))
    return np.array([[c, 0.0, -s], [0.0, 1.0, 0.0], [s, 0.0, c]])


def so3_rx_inverse(x: float) -> np.ndarray:
    return so3_rx(x).T


def so3_base(x: np.ndarray, sq: np.ndarray, parity: Parity):
    """Base vector before the phi_0 rotation: (1,0,0) even, (x,0,sqrt(1-x^2)) odd."""
    if parity is Parity.EVEN:
        return np.ones_like(x), np.zeros_like(x), np.zeros_like(x)
    return x.copy(), np.zeros_like(x), sq.copy()


def _so3_sweep(x: np.ndarray, phases: np.ndarray, parity: Parity, stop: int):
    """Apply the recurrence through phi_{stop-1}; returns (a, g, alpha) arrays."""
    sq = _sqrt1m(x)
    cx, sx = 2.0 * x * x - 1.0, 2.0 * x * sq
    a, g, al = so3_base(x, sq, parity)
    c0, s0 = math.cos(2.0 * phases[0]), math.sin(2.0 * phases[0])
    a, g = c0 * a - s0 * g, s0 * a + c0 * g
    for phi in phases[1:stop]:
        a, al = cx * a - sx * al, sx * a + cx * al
        c, s = math.cos(2.0 * phi), math.sin(2.0 * phi)
        a, g = c * a - s * g, s * a + c * g
    return a, g, al


def so3_state(x, phi: ReducedPhaseFactors):
    """Full sphere vector (Re P, Im P, sqrt(1-x^2) Q) after all reduced phases."""
    xa = _check_domain(x)
    a, g, al = _so3_sweep(xa, phi.phases, phi.parity, phi.dtilde)
    return np.stack([a, g, al], -1)


def evaluate_g_real(x, phi: ReducedPhaseFactors):
    """g(x, phi) through the SO(3) recurrence.

    The last phase only enters through the covector
    H = (0, 1, 0) R_z(2 phi_last) = (sin 2phi_last, cos 2phi_last, 0), applied after
    the final R_x.
    """
    xa = _check_domain(x)
    p = phi.phases
    n = p.size
    if n == 1:
        _, g, _ = _so3_sweep(xa, p, phi.parity, 1)
        return _unwrap(g, xa.ndim == 0)
    a, g, al = _so3_sweep(xa, p, phi.parity, n - 1)
    sq = _sqrt1m(xa)
    a = (2.0 * xa * xa - 1.0) * a - 2.0 * xa * sq * al
    last = 2.0 * p[-1]
    out = math.sin(last) * a + math.cos(last) * g
    return _unwrap(out, xa.ndim == 0)
