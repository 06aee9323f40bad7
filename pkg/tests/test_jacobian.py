import math
import time

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import PARITIES, random_phases
from qspnewton.chebyshev import evaluate_series, sample_grid
from qspnewton.jacobian import (
    derivative_samples_complex,
    derivative_samples_real,
    jacobian_fd,
    jacobian_mps_complex,
    jacobian_mps_real,
    jacobian_on_grid,
    lobatto_coefficient_rows,
    lobatto_half_nodes,
    lobatto_size,
)
from qspnewton.qsp import evaluate_g_complex
from qspnewton.types import ChebyshevCoeffVector, Parity, ReducedPhaseFactors, build_full, full_degree, shift_phase


def rel_frobenius(a, b):
    return np.linalg.norm(a - b) / np.linalg.norm(b)


@pytest.mark.parametrize("parity", PARITIES)
@pytest.mark.parametrize("dtilde", [1, 2, 4, 7, 64])
def test_jacobian_at_zero_is_2i(parity, dtilde):
    phi = ReducedPhaseFactors.zeros(dtilde, parity)
    for jac in (jacobian_mps_real, jacobian_mps_complex):
        assert np.max(np.abs(jac(phi) - 2 * np.eye(dtilde))) <= 1e-12
    if dtilde <= 7:
        assert np.max(np.abs(jacobian_fd(phi) - 2 * np.eye(dtilde))) <= 1e-8


@given(st.floats(-4, 4))
def test_scalar_jacobian(phi0):
    phi = ReducedPhaseFactors("even", [phi0])
    expected = 2 * math.cos(2 * phi0)
    assert abs(jacobian_mps_real(phi)[0, 0] - expected) < 1e-14
    assert abs(jacobian_mps_complex(phi)[0, 0] - expected) < 1e-14


@pytest.mark.parametrize("parity", PARITIES)
def test_mps_vs_fd(rng, parity):
    for dtilde in (5, 30):
        phi = random_phases(rng, dtilde, parity)
        fd = jacobian_fd(phi)
        assert rel_frobenius(jacobian_mps_real(phi), fd) <= 1e-6
        assert rel_frobenius(jacobian_mps_complex(phi), fd) <= 1e-6


def test_mps_real_vs_fd_large(rng):
    phi = random_phases(rng, 200, Parity.EVEN, scale=0.3)
    assert rel_frobenius(jacobian_mps_real(phi), jacobian_fd(phi)) <= 1e-6


@pytest.mark.parametrize("parity", PARITIES)
@pytest.mark.parametrize("dtilde", [3, 30, 200])
def test_real_vs_complex(rng, parity, dtilde):
    phi = random_phases(rng, dtilde, parity)
    assert np.max(np.abs(jacobian_mps_real(phi) - jacobian_mps_complex(phi))) <= 1e-12


@pytest.mark.parametrize("parity", PARITIES)
@pytest.mark.parametrize("dtilde", [1, 2, 9, 40])
def test_symmetric_shift_identity(rng, parity, dtilde):
    # each derivative sample is 2 g on the full phases with one entry shifted by pi/2
    phi = random_phases(rng, dtilde, parity)
    x = sample_grid(phi.degree)
    psi = build_full(phi)
    real = derivative_samples_real(phi)
    cplx = derivative_samples_complex(phi)
    for i in range(dtilde):
        shifted = shift_phase(psi, dtilde - 1 - i, math.pi / 2)
        ref = 2 * evaluate_g_complex(x, shifted)
        assert np.max(np.abs(real[i] - ref)) <= 1e-12
        assert np.max(np.abs(cplx[i] - ref)) <= 1e-12


@given(st.integers(1, 300), st.sampled_from(PARITIES), st.integers(0, 2**32 - 1))
def test_lobatto_transform_recovers_coefficients(dtilde, parity, seed):
    rng = np.random.default_rng(seed)
    c = rng.uniform(-1, 1, (3, dtilde))
    c /= np.sum(np.abs(c), axis=1, keepdims=True)
    n_lobatto = lobatto_size(full_degree(dtilde, parity))
    assert n_lobatto % 2 == 0 and n_lobatto >= full_degree(dtilde, parity)
    x = lobatto_half_nodes(n_lobatto)
    assert x[0] == 1.0 and x[-1] == 0.0
    half = np.array([evaluate_series(ChebyshevCoeffVector(parity, row), x) for row in c])
    assert np.max(np.abs(lobatto_coefficient_rows(half, parity, dtilde) - c)) <= 1e-14


@pytest.mark.parametrize("parity", PARITIES)
@pytest.mark.parametrize("dtilde", [1, 2, 50, 301])
def test_lobatto_matches_f_grid(rng, parity, dtilde):
    phi = random_phases(rng, dtilde, parity)
    assert np.max(np.abs(jacobian_mps_real(phi) - jacobian_on_grid(phi))) <= 1e-12


def test_fd_shape_and_step(rng):
    phi = random_phases(rng, 6, Parity.ODD)
    jac = jacobian_fd(phi)
    assert jac.shape == (6, 6)
    with pytest.raises(ValueError):
        jacobian_fd(phi, h=0.0)


def _best_time(fn, reps=3):
    best = math.inf
    for _ in range(reps):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def test_cost_scaling(rng):
    # doubling the degree costs at most ~4.5x (quadratic plus log)
    times = {}
    for d in (200, 400, 800, 1600):
        phi = random_phases(rng, d // 2 + 1, Parity.EVEN, scale=0.5)
        times[d] = _best_time(lambda: jacobian_mps_real(phi))
    ratios = [times[2 * d] / times[d] for d in (200, 400, 800)]
    assert max(ratios) <= 4.5, ratios
