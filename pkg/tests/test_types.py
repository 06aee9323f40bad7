import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qspnewton.types import (
    ChebyshevCoeffVector,
    FullPhaseFactors,
    InvalidInputError,
    Parity,
    ReducedPhaseFactors,
    build_full,
    canonical_center,
    full_degree,
    reduce_full,
    reduced_length,
    shift_phase,
)

phase_lists = st.lists(st.floats(-10, 10, allow_nan=False), min_size=1, max_size=40)


def test_parity_parse_and_degree():
    assert Parity.parse("even") is Parity.EVEN
    assert Parity.parse("ODD") is Parity.ODD
    assert Parity.parse(1) is Parity.ODD
    assert Parity.of_degree(6) is Parity.EVEN
    with pytest.raises(InvalidInputError):
        Parity.parse("both")


@pytest.mark.parametrize("dtilde,parity,d", [(1, "even", 0), (1, "odd", 1), (4, "even", 6), (4, "odd", 7)])
def test_full_degree(dtilde, parity, d):
    assert full_degree(dtilde, Parity.parse(parity)) == d
    assert reduced_length(d) == dtilde


def test_build_full_examples():
    assert build_full(ReducedPhaseFactors("even", [math.pi / 8])).psi.tolist() == [math.pi / 4]
    assert build_full(ReducedPhaseFactors("odd", [math.pi / 4])).psi.tolist() == [math.pi / 4] * 2
    a, b, c = 0.1, 0.2, 0.3
    psi = build_full(ReducedPhaseFactors("even", [a, b, c]))
    assert psi.psi.tolist() == [c, b, 2 * a, b, c]
    assert psi.symmetric


def test_empty_phases_rejected():
    with pytest.raises(InvalidInputError):
        ReducedPhaseFactors("even", [])
    with pytest.raises(InvalidInputError):
        ChebyshevCoeffVector("odd", [])


@given(phase_lists, st.sampled_from(["even", "odd"]))
def test_build_reduce_round_trip(values, parity):
    phi = ReducedPhaseFactors(parity, values)
    psi = build_full(phi)
    assert psi.degree == phi.degree
    assert np.array_equal(psi.psi, psi.psi[::-1])
    n = phi.dtilde
    if phi.parity is Parity.EVEN:
        assert psi.psi[n - 1] == 2 * phi.phases[0]
    else:
        assert psi.psi[n - 1] == psi.psi[n] == phi.phases[0]
    assert reduce_full(psi) == phi


def test_shift_phase_examples():
    psi = FullPhaseFactors(np.zeros(3), symmetric=True)
    center = shift_phase(psi, 1, math.pi / 2)
    assert center.psi.tolist() == [0, math.pi / 2, 0] and center.symmetric
    edge = shift_phase(psi, 0, math.pi / 2)
    assert edge.psi.tolist() == [math.pi / 2, 0, 0] and not edge.symmetric
    a, b = 0.4, -0.2
    out = shift_phase(FullPhaseFactors([a, b, a], symmetric=True), 2, math.pi / 2)
    assert out.psi.tolist() == [a, b, a + math.pi / 2]
    assert psi.psi.tolist() == [0, 0, 0]  # input untouched
    with pytest.raises(InvalidInputError):
        shift_phase(psi, 3, 1.0)


def test_values_are_read_only():
    phi = ReducedPhaseFactors("even", [0.1, 0.2])
    with pytest.raises(ValueError):
        phi.phases[0] = 1.0


def test_coefficient_vector_degrees():
    c = ChebyshevCoeffVector("odd", [1.0, 2.0, 3.0])
    assert c.degree == 5
    assert c.degrees().tolist() == [1, 3, 5]
    assert c.scaled(2.0).coeffs.tolist() == [2.0, 4.0, 6.0]


@given(st.floats(-50, 50, allow_nan=False), phase_lists)
def test_canonical_center(center, rest):
    phi = ReducedPhaseFactors("even", [center] + rest)
    out = canonical_center(phi)
    assert -math.pi <= 2 * out.phases[0] < math.pi
    assert math.isclose(math.cos(2 * out.phases[0]), math.cos(2 * center), abs_tol=1e-12)
    assert np.array_equal(out.phases[1:], phi.phases[1:])
    odd = ReducedPhaseFactors("odd", [center])
    assert canonical_center(odd) == odd
