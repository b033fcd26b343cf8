import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ampbisect.baseline import (
    estimate_angles,
    max_angle_error,
    required_shots,
    rms_angle_error,
    sample,
    sample_counts,
)
from ampbisect.generators import generate_random_state
from ampbisect.statevector import basis_state, prepare_from_angle


def test_deterministic_outcome():
    assert sample_counts(basis_state(1, 1), 1234, seed=7).tolist() == [0, 1234]


def test_binomial_band():
    counts = sample_counts(prepare_from_angle(math.pi / 6), 10 ** 6, seed=1)
    # 3 sigma with sigma = sqrt(0.25 * 0.75 / 1e6)
    assert abs(counts[1] / 10 ** 6 - 0.25) <= 1.3e-3


def test_same_seed_same_counts():
    psi = generate_random_state(3, 0)
    assert np.array_equal(sample_counts(psi, 5000, 99), sample_counts(psi, 5000, 99))
    assert not np.array_equal(sample_counts(psi, 5000, 99), sample_counts(psi, 5000, 100))


def test_rejects_nonpositive_shots():
    with pytest.raises(ValueError):
        sample_counts(basis_state(0, 1), 0, 1)


@pytest.mark.parametrize(
    "counts, expected",
    [([0, 40], [0.0, math.pi / 2]), ([20, 20], [math.pi / 4] * 2), ([30, 10], [math.pi / 3, math.pi / 6])],
)
def test_estimate_angles(counts, expected):
    np.testing.assert_allclose(estimate_angles(counts, 40), expected, atol=1e-15)


def test_estimate_angles_checks_total():
    with pytest.raises(ValueError):
        estimate_angles([1, 2], 4)


@pytest.mark.parametrize("n, delta_e, shots", [(1, 0.1, 200), (10, 0.01, 10_240_000), (10, 1e-3, 1_024_000_000)])
def test_required_shots(n, delta_e, shots):
    assert required_shots(n, delta_e) == shots


def test_required_shots_rejects():
    with pytest.raises(ValueError):
        required_shots(0, 0.1)
    with pytest.raises(ValueError):
        required_shots(2, 0.0)


@given(st.integers(1, 20), st.floats(1e-4, 2.0))
def test_required_shots_is_smallest_sufficient(n, d):
    shots = required_shots(n, d)
    exact = Fraction(2 ** n) / Fraction(repr(d)) ** 2
    assert shots >= exact > shots - 1


@given(st.integers(1, 4), st.integers(1, 10_000), st.integers(0, 2 ** 63))
def test_count_conservation(n, shots, seed):
    rep = sample(generate_random_state(n, seed % 97), shots, seed)
    assert sum(rep.counts) == shots
    assert all(0.0 <= a <= math.pi / 2 for a in rep.angle_estimates)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("delta_e", [0.1, 0.05])
def test_shot_budget_sufficient(n, delta_e):
    psi = generate_random_state(n, 100 + n)
    shots = required_shots(n, delta_e)
    hits = sum(max_angle_error(psi, shots, s) <= delta_e for s in range(200))
    assert hits >= 190


def test_rms_scales_like_inverse_sqrt_n():
    psi = generate_random_state(2, 3)
    seeds = range(300)
    ratios = [rms_angle_error(psi, n, seeds) / rms_angle_error(psi, 4 * n, seeds) for n in (400, 1600, 6400)]
    for r in ratios:
        assert 1.0 <= r <= 4.0
