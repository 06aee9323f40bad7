"""Definite-parity Chebyshev series: sampling grid, coefficient extraction, evaluation."""

from __future__ import annotations

import numpy as np

from .types import ChebyshevCoeffVector, DomainError, InvalidInputError, Parity


def sample_grid(d: int) -> np.ndarray:
    """Nodes x_j = cos(2 pi j / (2d + 1)), j = 0..d (strictly decreasing, x_0 = 1)."""
    if d < 0:
        raise InvalidInputError("degree must be non-negative")
    return np.cos(2.0 * np.pi * np.arange(d + 1) / (2 * d + 1))


def dft_odd_length(v) -> np.ndarray:
    """Full DFT X_l = sum_j v_j exp(-2 pi i j l / n) for odd n.

    pocketfft (numpy.fft) handles every length in O(n log n), prime
    factors included.
    """
    v = np.asarray(v)
    n = v.shape[-1]
    if n % 2 == 0:
        raise InvalidInputError(f"length must be odd, got {n}")
    return np.fft.fft(v, axis=-1)


def _mirrored_cosine_sums(samples: np.ndarray) -> np.ndarray:
    """v_l = Re sum_{j<2d+1} g_j e^{-2 pi i jl/(2d+1)}, l = 0..d, on the mirrored samples."""
    mirrored = np.concatenate([samples, samples[..., :0:-1]], axis=-1)
    return np.fft.rfft(mirrored, axis=-1).real


def coefficient_rows(samples, parity: Parity) -> np.ndarray:
    """Row-wise version of :func:`coefficients_from_samples` for a (m, d+1) array."""
    samples = np.asarray(samples, dtype=float)
    parity = Parity.parse(parity)
    d = samples.shape[-1] - 1
    if d < 0 or d % 2 != parity.bit:
        raise InvalidInputError(
            f"{samples.shape[-1]} samples do not match a {parity.value} degree"
        )
    n = 2 * d + 1
    v = _mirrored_cosine_sums(samples) * (2.0 / n)
    if parity is Parity.EVEN:
        out = v[..., 0::2].copy()
        out[..., 0] /= 2.0
    else:
        out = v[..., 1::2].copy()
    return out


def coefficients_from_samples(samples, parity: Parity) -> ChebyshevCoeffVector:
    """Chebyshev coefficients of a parity-``parity`` polynomial from its values on :func:`sample_grid`."""
    samples = np.asarray(samples, dtype=float)
    if samples.ndim != 1:
        raise InvalidInputError("samples must be one-dimensional")
    return ChebyshevCoeffVector(parity, coefficient_rows(samples, parity))


def expand_coefficients(c: ChebyshevCoeffVector) -> np.ndarray:
    """Dense coefficients a_0..a_d in the full T_k basis (zeros at the other parity)."""
    a = np.zeros(c.degree + 1)
    a[c.parity.bit :: 2] = c.coeffs
    return a


def clenshaw(a: np.ndarray, x) -> np.ndarray:
    """sum_k a_k T_k(x) by Clenshaw's recurrence, vectorized over x."""
    x = np.asarray(x, dtype=float)
    b1 = np.zeros_like(x)
    b2 = np.zeros_like(x)
    x2 = 2.0 * x
    for ak in a[:0:-1]:
        b1, b2 = ak + x2 * b1 - b2, b1
    return a[0] + x * b1 - b2


def evaluate_series(c: ChebyshevCoeffVector, x):
    """f(x) = sum_j c_j T_{2j + parity}(x)."""
    xa = np.asarray(x, dtype=float)
    if np.any(np.abs(xa) > 1.0):
        raise DomainError("x must lie in [-1, 1]")
    out = clenshaw(expand_coefficients(c), xa)
    return out[()] if xa.ndim == 0 else out


def _trig_derivatives(theta: np.ndarray, k: np.ndarray, coeffs: np.ndarray):
    """h, h', h'' for h(theta) = sum c cos(k theta)."""
    ang = np.outer(theta, k)
    cos, sin = np.cos(ang), np.sin(ang)
    return cos @ coeffs, -(sin @ (k * coeffs)), -(cos @ (k * k * coeffs))


def infinity_norm(c: ChebyshevCoeffVector, grid_points: int | None = None) -> float:
    """max |f| on [-1, 1].

    Scans x_k = cos(k pi / (grid_points - 1)), then polishes each grid local
    maximum of |f| with Newton steps on d f(cos theta) / d theta = 0.  The
    polishing matters near ||f|| = 1: a bare grid scan of a degree-1000
    series can undershoot the true maximum by 1e-7.
    """
    degree = c.degree
    if grid_points is None:
        grid_points = max(2048, 8 * degree)
    grid_points = max(int(grid_points), 4 * degree, 3)
    theta = np.linspace(0.0, np.pi, grid_points)
    values = np.abs(evaluate_series(c, np.cos(theta)))
    best = float(values.max())
    if degree == 0:
        return best

    padded = np.concatenate([[-np.inf], values, [-np.inf]])
    peaks = np.flatnonzero((values >= padded[:-2]) & (values >= padded[2:]))
    k = c.degrees().astype(float)
    step = theta[1] - theta[0]
    # an interior peak can exceed its grid value by at most max|h''| step^2 / 8
    slack = 0.125 * float(np.sum(k * k * np.abs(c.coeffs))) * step * step
    peaks = peaks[values[peaks] >= best - slack]

    for chunk in np.array_split(peaks, max(1, peaks.size // 256)):
        t = theta[chunk]
        lo, hi = t - step, t + step
        for _ in range(8):
            _, h1, h2 = _trig_derivatives(t, k, c.coeffs)
            with np.errstate(divide="ignore", invalid="ignore"):
                t_new = t - h1 / h2
            ok = np.isfinite(t_new) & (t_new >= lo) & (t_new <= hi)
            t = np.where(ok, t_new, t)
        # cos(k t) loses ~k ulp to argument rounding; take the final values from Clenshaw
        h = evaluate_series(c, np.cos(np.clip(t, 0.0, np.pi)))
        best = max(best, float(np.abs(h).max()))
    return best


__all__ = [
    "sample_grid",
    "dft_odd_length",
    "coefficient_rows",
    "coefficients_from_samples",
    "expand_coefficients",
    "clenshaw",
    "evaluate_series",
    "infinity_norm",
]
