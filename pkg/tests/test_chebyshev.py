import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import PARITIES, random_coeffs
from qspnewton.chebyshev import (
    clenshaw,
    coefficient_rows,
    coefficients_from_samples,
    dft_odd_length,
    evaluate_series,
    infinity_norm,
    sample_grid,
)
from qspnewton.targets import jacobi_anger_cos
from qspnewton.types import ChebyshevCoeffVector, DomainError, InvalidInputError, Parity, full_degree


def naive_dft(v):
    n = len(v)
    k = np.arange(n)
    return np.exp(-2j * np.pi * np.outer(k, k) / n) @ v


def test_sample_grid():
    x = sample_grid(10)
    assert x[0] == 1.0 and x.size == 11
    assert np.all(np.diff(x) < 0)
    assert np.allclose(x, np.cos(2 * np.pi * np.arange(11) / 21))


def test_dft_examples():
    n = 15
    e = np.zeros(n)
    e[0] = 1
    assert np.allclose(dft_odd_length(e), np.ones(n))
    out = dft_odd_length(np.full(n, 2.5))
    assert abs(out[0] - n * 2.5) < 1e-12 and np.max(np.abs(out[1:])) < 1e-12
    with pytest.raises(InvalidInputError):
        dft_odd_length(np.ones(8))


@pytest.mark.parametrize("n", [15, 101, 557, 2785])
def test_dft_matches_naive(rng, n):
    v = rng.standard_normal(n)
    ref = naive_dft(v)
    assert np.max(np.abs(dft_odd_length(v) - ref)) <= 1e-12 * np.max(np.abs(ref))


def test_extraction_examples():
    x = sample_grid(2)
    c = coefficients_from_samples(2 * x**2 - 1, Parity.EVEN)
    assert np.allclose(c.coeffs, [0, 1], atol=1e-15)
    z = coefficients_from_samples(np.zeros(5), "even")
    assert np.array_equal(z.coeffs, np.zeros(3))
    with pytest.raises(InvalidInputError):
        coefficients_from_samples(np.zeros(4), "even")


def test_evaluate_series_examples():
    assert evaluate_series(ChebyshevCoeffVector("even", [1.0]), 0.3) == 1.0
    assert evaluate_series(ChebyshevCoeffVector("odd", [1.0]), 0.3) == 0.3
    assert abs(evaluate_series(ChebyshevCoeffVector("even", [0.0, 1.0]), 0.5) + 0.5) < 1e-16
    with pytest.raises(DomainError):
        evaluate_series(ChebyshevCoeffVector("even", [1.0]), 1.01)


def test_clenshaw_matches_numpy(rng):
    a = rng.standard_normal(40)
    x = rng.uniform(-1, 1, 50)
    assert np.allclose(clenshaw(a, x), np.polynomial.chebyshev.chebval(x, a), atol=1e-12)


@pytest.mark.parametrize("parity", PARITIES)
@pytest.mark.parametrize("dtilde", [1, 2, 17, 100, 500])
def test_round_trip(rng, parity, dtilde):
    c = random_coeffs(rng, dtilde, parity)
    x = sample_grid(c.degree)
    back = coefficients_from_samples(evaluate_series(c, x), parity)
    assert np.max(np.abs(back.coeffs - c.coeffs)) <= 1e-13


def test_round_trip_unnormalized_relative(rng):
    c = ChebyshevCoeffVector("even", rng.uniform(-1, 1, 500))
    back = coefficients_from_samples(evaluate_series(c, sample_grid(c.degree)), "even")
    scale = np.max(np.abs(evaluate_series(c, sample_grid(c.degree))))
    assert np.max(np.abs(back.coeffs - c.coeffs)) <= 1e-13 * scale


@given(st.integers(1, 60), st.sampled_from(PARITIES), st.floats(-3, 3), st.integers(0, 2**32 - 1))
def test_linearity(dtilde, parity, lam, seed):
    rng = np.random.default_rng(seed)
    d = full_degree(dtilde, parity)
    u, v = rng.standard_normal((2, d + 1))
    lhs = coefficients_from_samples(u + lam * v, parity).coeffs
    rhs = coefficients_from_samples(u, parity).coeffs + lam * coefficients_from_samples(v, parity).coeffs
    assert np.allclose(lhs, rhs, atol=1e-12)


@pytest.mark.parametrize("dtilde", [3, 40, 250])
def test_parity_selection(rng, dtilde):
    odd = random_coeffs(rng, dtilde, Parity.ODD)
    even = random_coeffs(rng, dtilde, Parity.EVEN)
    # an odd polynomial of degree 2n-1 sampled on the even grid of degree 2n
    d = full_degree(dtilde + 1, Parity.EVEN)
    assert np.max(np.abs(coefficients_from_samples(evaluate_series(odd, sample_grid(d)), "even").coeffs)) <= 1e-13
    d = full_degree(dtilde, Parity.ODD)
    assert np.max(np.abs(coefficients_from_samples(evaluate_series(even, sample_grid(d)), "odd").coeffs)) <= 1e-13


@pytest.mark.parametrize("parity", PARITIES)
def test_rows_match_single(rng, parity):
    d = full_degree(70, parity)
    s = rng.standard_normal((9, d + 1)) / (d + 1)
    single = np.array([coefficients_from_samples(r, parity).coeffs for r in s])
    assert np.max(np.abs(coefficient_rows(s, parity) - single)) < 1e-15


def test_infinity_norm_examples():
    assert infinity_norm(ChebyshevCoeffVector("even", [1.0])) == 1.0
    assert infinity_norm(ChebyshevCoeffVector("even", [0.0, 1.0])) == pytest.approx(1.0, abs=1e-15)
    assert abs(infinity_norm(jacobi_anger_cos(10.0)) - 1.0) <= 1e-10


def test_infinity_norm_polishes_between_grid_points():
    c = jacobi_anger_cos(1000.0)
    x = np.cos(np.linspace(0, np.pi, 200001))
    dense = np.max(np.abs(evaluate_series(c, x)))
    assert infinity_norm(c) >= dense - 1e-15
    assert abs(infinity_norm(c) - 1.0) < 1e-12


@given(st.integers(1, 30), st.sampled_from(PARITIES), st.integers(0, 2**32 - 1))
def test_infinity_norm_bounds(dtilde, parity, seed):
    rng = np.random.default_rng(seed)
    c = ChebyshevCoeffVector(parity, rng.standard_normal(dtilde))
    norm = infinity_norm(c)
    x = rng.uniform(-1, 1, 500)
    assert norm >= np.max(np.abs(evaluate_series(c, x))) - 1e-13
    assert norm <= np.sum(np.abs(c.coeffs)) + 1e-13
    assert norm >= abs(evaluate_series(c, 1.0)) - 1e-13
