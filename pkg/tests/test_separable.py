import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ampbisect.bisection import SearchConfig, bound_for_iters, search_single
from ampbisect.generators import bell_times_product, random_angles
from ampbisect.separable import (
    NotSeparableError,
    amplitude_from_angles,
    factor_product_state,
    product_state,
    qubit_unfolding,
    search_separable,
)
from ampbisect.statevector import prepare_from_amplitudes, prepare_from_angle

angle_lists = st.lists(st.floats(0.0, math.pi / 2), min_size=1, max_size=8)


def test_recovers_constructed_angles():
    got = factor_product_state(product_state([math.pi / 6, math.pi / 3]))
    np.testing.assert_allclose(got.angles, [math.pi / 6, math.pi / 3], atol=1e-15)


def test_bell_state_rejected():
    assert factor_product_state(prepare_from_amplitudes([1, 0, 0, 1])) is None


def test_round_trip_n8():
    rng = np.random.default_rng(8)
    angles = random_angles(8, rng)
    got = factor_product_state(product_state(angles))
    np.testing.assert_allclose(got.angles, angles, rtol=0, atol=1e-10)
    np.testing.assert_allclose(got.state().amplitudes, product_state(angles).amplitudes, atol=1e-10)


def test_unfolding_rows_follow_qubit_bit():
    psi = prepare_from_amplitudes(np.arange(1, 9))
    u = qubit_unfolding(psi, 1)
    # qubit 1 (middle) is bit value 2 of the index
    idx1 = [i for i in range(8) if i & 2]
    np.testing.assert_allclose(u[1], psi.amplitudes[idx1])


@given(angle_lists)
@settings(max_examples=60)
def test_factorization_soundness(angles):
    psi = product_state(angles)
    got = factor_product_state(psi)
    assert got is not None
    np.testing.assert_allclose(got.state().amplitudes, psi.amplitudes, rtol=0, atol=1e-10)


@given(st.integers(2, 8), st.integers(0, 2 ** 32 - 1))
@settings(max_examples=40)
def test_entangled_rejected(n, seed):
    assert factor_product_state(bell_times_product(n, np.random.default_rng(seed))) is None


def test_search_separable_accuracy():
    angles = [0.0, math.pi / 2, math.pi / 4]
    results = search_separable(product_state(angles), SearchConfig(iterations=15))
    for r, t in zip(results, angles):
        assert abs(r.theta_hat - t) <= math.pi / 2 ** 16


@pytest.mark.parametrize("init", ["midpoint", "random"])
def test_single_factor_matches_search_single(init):
    cfg = SearchConfig(iterations=18, init=init, seed=4 if init == "random" else None)
    psi = prepare_from_angle(1.234)
    (sep,) = search_separable(psi, cfg)
    single = search_single(psi, cfg)
    assert sep.theta_hat == single.theta_hat
    assert sep.interval_history == single.interval_history


def test_call_accounting_n10():
    rng = np.random.default_rng(10)
    results = search_separable(product_state(random_angles(10, rng)), SearchConfig(iterations=20))
    assert not any(r.converged_exact for r in results)
    assert sum(r.oracle_calls for r in results) == 200


def test_non_separable_raises():
    with pytest.raises(NotSeparableError, match="factor_product_state"):
        search_separable(prepare_from_amplitudes([1, 0, 0, 1]), SearchConfig(iterations=5))


def test_amplitudes_from_estimated_angles():
    rng = np.random.default_rng(12)
    n, m = 6, 20
    angles = random_angles(n, rng)
    psi = product_state(angles)
    est = [r.theta_hat for r in search_separable(psi, SearchConfig(iterations=m))]
    for k in range(psi.dim):
        assert amplitude_from_angles(angles, k) == pytest.approx(psi[k], abs=1e-14)
        assert abs(amplitude_from_angles(est, k) - psi[k]) <= n * bound_for_iters(m)
