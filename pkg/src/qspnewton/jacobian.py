"""Jacobian of the phase-to-coefficient map F.

Column i of DF is the coefficient vector of dg/dphi_i.  The QSP product is
a bond-dimension-2 (complex) or 3 (real) chain, so for every node the
derivative samples of all columns come out of a single sweep: a left
partial product is peeled one factor at a time while a right partial
product grows, and the derivative with respect to phi_i is the left piece,
the differentiated Z factor, and the right piece contracted together.  That
gives O(d^2) work for the samples instead of O(d^3) column by column.

Each dg/dphi_i is a polynomial of degree d with the parity of g, so its
coefficients do not depend on which nodes it is sampled at.  The matrix
builders sample at Chebyshev-Lobatto nodes cos(pi j / N) with N >= d a fast
FFT size: parity means only the nodes with x >= 0 need a sweep, and a
DCT-I of length N + 1 replaces the odd-length DFT of the F grid, whose
length 2d + 1 often has large prime factors.  Total O(d^2 log d).
"""

from __future__ import annotations

import math

import numpy as np
import scipy.fft

from .chebyshev import coefficient_rows, sample_grid
from .qsp import _sqrt1m, unit_defect
from .types import Parity, ReducedPhaseFactors


def lobatto_size(d: int) -> int:
    """Even N >= max(d, 2) with N/2 a fast transform length."""
    return 2 * scipy.fft.next_fast_len(max(1, (d + 1) // 2))


def lobatto_half_nodes(n_lobatto: int) -> np.ndarray:
    """cos(pi j / N) for j = 0..N/2, i.e. the nodes in [0, 1]."""
    x = np.cos(np.pi * np.arange(n_lobatto // 2 + 1) / n_lobatto)
    x[-1] = 0.0
    return x


def lobatto_coefficient_rows(half: np.ndarray, parity: Parity, dtilde: int) -> np.ndarray:
    """Parity coefficients of each row, given samples at :func:`lobatto_half_nodes`."""
    k = half.shape[-1] - 1
    n_lobatto = 2 * k
    sign = 1.0 if parity is Parity.EVEN else -1.0
    # g(cos(pi (N - j) / N)) = g(-x_j) = +-g(x_j)
    full = np.concatenate([half, sign * half[..., k - 1 :: -1]], axis=-1)
    a = scipy.fft.dct(full, type=1, axis=-1) / n_lobatto
    a[..., 0] *= 0.5
    a[..., n_lobatto] *= 0.5
    return a[..., parity.bit : 2 * dtilde + parity.bit : 2]


def derivative_samples_real(phi: ReducedPhaseFactors, x=None) -> np.ndarray:
    """dg/dphi_i at nodes ``x`` (default: the F sample grid) through the SO(3) chain.

    Returns shape (dtilde, len(x)).

    Chain: g = e_g Z(phi_{n-1}) X Z(phi_{n-2}) X ... X Z(phi_0) b, with
    b = (1, 0, 0) for even parity and (x, 0, sqrt(1-x^2)) for odd.

    dZ(phi)/dphi = 2 J Z(phi) with J the generator of the (a, g) block, so
    with the right vector taken after its Z(phi_i) factor the sample is
    2 L J R, independent of phi_i.  The left covector (peeled by X^{-1},
    Z(-phi)) and the right vector (grown by X, Z(phi)) then obey identical
    update formulas and are swept together as the two rows of one array.
    """
    p = phi.phases
    n = p.size
    x = sample_grid(phi.degree) if x is None else np.asarray(x, dtype=float)
    m = x.size
    sq = _sqrt1m(x)
    cx, sx = 2.0 * x * x - 1.0, 2.0 * x * sq
    cos2 = [math.cos(2.0 * v) for v in p]
    sin2 = [math.sin(2.0 * v) for v in p]

    # left covector L = e_g Z(phi_{n-1}) X ... Z(phi_1) X
    la = np.zeros(m)
    lg = np.ones(m)
    lal = np.zeros(m)
    for j in range(n - 1, 0, -1):
        c, s = cos2[j], sin2[j]
        la, lg = la * c + lg * s, lg * c - la * s
        la, lal = la * cx + lal * sx, lal * cx - la * sx

    # row 0: left covector, row 1: right vector
    a, g, al = np.empty((2, m)), np.empty((2, m)), np.empty((2, m))
    a[0], g[0], al[0] = la, lg, lal
    if phi.parity is Parity.EVEN:
        a[1], g[1], al[1] = 1.0, 0.0, 0.0
    else:
        a[1], g[1], al[1] = x, 0.0, sq
    c, s = cos2[0], sin2[0]
    a[1], g[1] = c * a[1] - s * g[1], s * a[1] + c * g[1]

    # exact inverse of the rounded X block, so peeling does not accumulate a norm bias
    inv_rho = 1.0 / (1.0 + unit_defect(cx, sx))
    kc = np.stack([cx * inv_rho, cx])
    ks = np.stack([sx * inv_rho, sx])
    t1, t2 = np.empty((2, m)), np.empty((2, m))

    out = np.empty((n, m))
    np.multiply(g[0], a[1], out=out[0])
    out[0] -= a[0] * g[1]
    for i in range(1, n):
        # (a, al) <- rows of L X^{-1} / X R: same form with the row's (c, s)
        np.multiply(a, kc, out=t1)
        np.multiply(al, ks, out=t2)
        t1 -= t2
        al *= kc
        np.multiply(a, ks, out=t2)
        al += t2
        a, t1 = t1, a
        # (a, g) <- rows of L Z(-phi_i) / Z(phi_i) R
        c, s = cos2[i], sin2[i]
        np.multiply(a, c, out=t1)
        np.multiply(g, s, out=t2)
        t1 -= t2
        g *= c
        np.multiply(a, s, out=t2)
        g += t2
        a, t1 = t1, a
        # L J R = lg ra - la rg
        np.multiply(g[0], a[1], out=out[i])
        np.multiply(a[0], g[1], out=t2[0])
        out[i] -= t2[0]
    out *= 2.0
    return out


def derivative_samples_complex(phi: ReducedPhaseFactors, x=None) -> np.ndarray:
    """dg/dphi_i at nodes ``x`` (default: the F sample grid) through SU(2) partial products.

    Sample i equals 2 Im[l iZ r] where l, r are the products to the left and
    right of the (first) occurrence of phi_i in the mirrored sequence.
    """
    p = phi.phases
    n = p.size
    d = phi.degree
    x = sample_grid(d) if x is None else np.asarray(x, dtype=float)
    s = 1j * _sqrt1m(x)
    delta = unit_defect(x, _sqrt1m(x))
    inv_det = 1.0 / (1.0 + delta)
    e = np.exp(1j * p)

    # l = (1, 0) prod_{j=n-1..1} e^{i phi_j Z} W
    l0 = np.ones(x.shape, dtype=complex)
    l1 = np.zeros(x.shape, dtype=complex)
    for j in range(n - 1, 0, -1):
        l0, l1 = l0 * e[j], l1 * e[j].conjugate()
        l0, l1 = l0 * x + l1 * s, l0 * s + l1 * x

    # r = center * l^T: e^{2 i phi_0 Z} (even) or e^{i phi_0 Z} W e^{i phi_0 Z} (odd)
    if phi.parity is Parity.EVEN:
        r0, r1 = l0 * e[0] ** 2, l1 * e[0].conjugate() ** 2
    else:
        r0, r1 = l0 * e[0], l1 * e[0].conjugate()
        r0, r1 = x * r0 + s * r1, s * r0 + x * r1
        r0, r1 = r0 * e[0], r1 * e[0].conjugate()

    out = np.empty((n, x.size))
    out[0] = 2.0 * (l0 * r0 - l1 * r1).real
    for i in range(1, n):
        # l <- l W^{-1} e^{-i phi_i Z}; W^{-1} = W^H / det
        l0, l1 = (l0 * x - l1 * s) * inv_det, (l1 * x - l0 * s) * inv_det
        l0, l1 = l0 * e[i].conjugate(), l1 * e[i]
        # r <- e^{i phi_i Z} W r
        r0, r1 = x * r0 + s * r1, s * r0 + x * r1
        r0, r1 = r0 * e[i], r1 * e[i].conjugate()
        out[i] = 2.0 * (l0 * r0 - l1 * r1).real
    return out * np.exp(-0.5 * d * np.log1p(delta))


def _build(phi: ReducedPhaseFactors, sampler) -> np.ndarray:
    n_lobatto = lobatto_size(phi.degree)
    half = sampler(phi, lobatto_half_nodes(n_lobatto))
    # row i holds the coefficients of dg/dphi_i, i.e. column i of DF
    return np.ascontiguousarray(lobatto_coefficient_rows(half, phi.parity, phi.dtilde).T)


def jacobian_mps_real(phi: ReducedPhaseFactors) -> np.ndarray:
    """DF(phi) from one SO(3) sweep over the nodes plus a batched DCT."""
    return _build(phi, derivative_samples_real)


def jacobian_mps_complex(phi: ReducedPhaseFactors) -> np.ndarray:
    """DF(phi) from one SU(2) sweep over the nodes plus a batched DCT."""
    return _build(phi, derivative_samples_complex)


def jacobian_on_grid(phi: ReducedPhaseFactors) -> np.ndarray:
    """DF(phi) from samples on the F grid and the same transform as F (cross-check)."""
    return np.ascontiguousarray(coefficient_rows(derivative_samples_real(phi), phi.parity).T)


def jacobian_fd(phi: ReducedPhaseFactors, h: float = 1e-6) -> np.ndarray:
    """Central finite differences of F, column by column (test oracle)."""
    from .solvers import evaluate_F

    if h <= 0:
        raise ValueError("step must be positive")
    base = phi.phases
    n = base.size
    jac = np.empty((n, n))
    for i in range(n):
        up, down = base.copy(), base.copy()
        up[i] += h
        down[i] -= h
        fu = evaluate_F(ReducedPhaseFactors(phi.parity, up)).coeffs
        fd = evaluate_F(ReducedPhaseFactors(phi.parity, down)).coeffs
        jac[:, i] = (fu - fd) / (2.0 * h)
    return jac
