import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ampbisect.comparator import (
    GATE_APPLICATIONS_PER_CALL,
    ComparisonOutcome as Out,
    compare_multi,
    compare_multi_full,
    compare_single,
    hidden_angle,
    outcome_from_trace,
    pipeline_trace,
    projected_amplitude,
    reduced_coordinates,
)
from ampbisect.generators import generate_random_state
from ampbisect.statevector import DomainError, QuantumState, basis_state, prepare_from_amplitudes, prepare_from_angle

R2 = math.sqrt(2.0)
angles = st.floats(0.0, math.pi / 2)


@pytest.mark.parametrize(
    "alpha, beta, expected",
    [
        (math.pi / 4, math.pi / 4, Out.EQUAL_WITHIN_TOL),
        (math.pi / 3, math.pi / 6, Out.HIDDEN_GREATER),
        (0.0, math.pi / 2, Out.HIDDEN_LESS),
    ],
)
def test_compare_single_examples(alpha, beta, expected):
    assert compare_single(prepare_from_angle(alpha), beta) is expected


def test_compare_multi_examples():
    uniform = prepare_from_amplitudes([1, 1, 1, 1])
    assert compare_multi(uniform, 3, math.pi / 6) is Out.EQUAL_WITHIN_TOL
    for beta in (0.0, 0.3, math.pi / 2 - 1e-6):
        assert compare_multi(basis_state(5, 3), 5, beta) is Out.HIDDEN_GREATER
    psi = prepare_from_amplitudes([1, 0, 1, 1])
    for beta in (1e-6, 0.5, math.pi / 2):
        assert compare_multi(psi, 1, beta) is Out.HIDDEN_LESS


def test_compare_rejects_bad_inputs():
    with pytest.raises(DomainError):
        compare_single(prepare_from_angle(0.2), -0.1)
    with pytest.raises(DomainError):
        compare_single(QuantumState(1, [0.6, -0.8]), 0.3)
    with pytest.raises(ValueError):
        compare_multi(generate_random_state(2, 1), 4, 0.3)
    with pytest.raises(ValueError):
        compare_single(generate_random_state(2, 1), 0.3)


def test_trace_example():
    tr = pipeline_trace(prepare_from_angle(math.pi / 6), None, math.pi / 3)
    # cos(pi/2), sin(pi/2), sin(-pi/6), cos(-pi/6)
    np.testing.assert_allclose(tr.phi2.amplitudes, np.array([0, 1, -0.5, math.sqrt(3) / 2]) / R2, atol=1e-12)
    np.testing.assert_allclose(tr.phi3.amplitudes, [0, 0, -1, 0], atol=1e-15)
    assert tr.projection_weight == pytest.approx(1 / 8, abs=1e-15)


def test_trace_equal_angles_has_no_projection():
    tr = pipeline_trace(prepare_from_angle(0.9), None, 0.9)
    assert tr.phi3 is None
    assert tr.projection_weight == pytest.approx(0.0, abs=1e-30)


@given(angles, angles)
def test_trace_closed_form_and_weight_law(alpha, beta):
    tr = pipeline_trace(prepare_from_angle(alpha), None, beta)
    closed = np.array([math.cos(alpha + beta), math.sin(alpha + beta),
                       math.sin(alpha - beta), math.cos(alpha - beta)]) / R2
    np.testing.assert_allclose(tr.phi2.amplitudes, closed, rtol=0, atol=1e-12)
    assert abs(np.linalg.norm(tr.phi2.amplitudes) - 1) <= 1e-12
    assert tr.projection_weight == pytest.approx(math.sin(alpha - beta) ** 2 / 2, abs=1e-12)
    assert 0.0 <= tr.projection_weight <= 0.5 + 1e-15


@given(angles, angles)
def test_fast_path_matches_trace(alpha, beta):
    psi = prepare_from_angle(alpha)
    tr = pipeline_trace(psi, None, beta)
    assert projected_amplitude(*reduced_coordinates(psi), beta) == pytest.approx(tr.projected_amplitude, abs=1e-15)
    assert compare_single(psi, beta, 1e-9) is outcome_from_trace(tr, 1e-9)


def _expected(gap, delta):
    if abs(gap) <= delta:
        return Out.EQUAL_WITHIN_TOL
    return Out.HIDDEN_GREATER if gap > 0 else Out.HIDDEN_LESS


@pytest.mark.parametrize("eq_tol", [1e-12, 1e-4, 1e-2])
def test_oracle_correctness_on_grid(eq_tol):
    delta = math.asin(math.sqrt(2) * eq_tol)
    grid = np.linspace(0, math.pi / 2, 91)
    for a in grid:
        psi = prepare_from_angle(a)
        for b in grid:
            if abs(abs(a - b) - delta) < 1e-9:
                continue
            assert compare_single(psi, b, eq_tol) is _expected(a - b, delta), (a, b)


def test_equal_band_edges():
    eq_tol = 1e-3
    delta = math.asin(math.sqrt(2) * eq_tol)
    a = 0.8
    psi = prepare_from_angle(a)
    assert compare_single(psi, a - 0.999 * delta, eq_tol) is Out.EQUAL_WITHIN_TOL
    assert compare_single(psi, a - 1.001 * delta, eq_tol) is Out.HIDDEN_GREATER
    assert compare_single(psi, a + 1.001 * delta, eq_tol) is Out.HIDDEN_LESS


def test_multi_trace_uses_effective_qubit():
    psi = prepare_from_amplitudes([1, 2, 3, 4])
    theta = hidden_angle(psi, 2)
    assert math.sin(theta) == pytest.approx(psi[2], abs=1e-15)
    tr = pipeline_trace(psi, 2, 0.4)
    assert tr.projection_weight == pytest.approx(math.sin(theta - 0.4) ** 2 / 2, abs=1e-12)


def test_full_space_agrees_with_reduced():
    rng = np.random.default_rng(3)
    for _ in range(60):
        psi = generate_random_state(int(rng.integers(1, 6)), int(rng.integers(1 << 30)))
        k = int(rng.integers(psi.dim))
        beta = float(rng.uniform(0, math.pi / 2))
        full = compare_multi_full(psi, k, beta)
        assert full.outcome is compare_multi(psi, k, beta)
        np.testing.assert_allclose(full.effective_coefficients, pipeline_trace(psi, k, beta).phi2.amplitudes,
                                   rtol=0, atol=1e-12)
        assert full.projection_weight == pytest.approx(math.sin(hidden_angle(psi, k) - beta) ** 2 / 2, abs=1e-12)


def test_full_space_equal_case():
    psi = prepare_from_amplitudes([1, 1, 1, 1])
    assert compare_multi_full(psi, 0, math.pi / 6).outcome is Out.EQUAL_WITHIN_TOL


def test_gate_count_constant():
    assert GATE_APPLICATIONS_PER_CALL == 2
