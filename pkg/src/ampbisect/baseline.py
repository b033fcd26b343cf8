"""Shot-sampling estimator: Born-rule counts and arcsin(sqrt(N_i/N)) angles.

Randomness comes from ``numpy.random.default_rng(seed)``, i.e. the PCG64
bit generator seeded through ``SeedSequence``; counts are a single
``Generator.multinomial`` draw, so a given (state, shots, seed) always
yields the same counts on a given numpy release.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .statevector import QuantumState


@dataclass(frozen=True)
class SampleReport:
    total_shots: int
    counts: tuple
    angle_estimates: tuple
    seed: int

    def amplitude_estimates(self) -> np.ndarray:
        return np.sin(np.asarray(self.angle_estimates))


def sample_counts(psi: QuantumState, n_shots: int, seed: int) -> np.ndarray:
    if int(n_shots) != n_shots or n_shots < 1:
        raise ValueError(f"n_shots must be a positive integer, got {n_shots!r}")
    p = psi.probabilities()
    p = p / p.sum()
    return np.random.default_rng(seed).multinomial(int(n_shots), p)


def estimate_angles(counts, n_total: int) -> np.ndarray:
    counts = np.asarray(counts, dtype=np.int64)
    if n_total <= 0 or np.any(counts < 0) or int(counts.sum()) != n_total:
        raise ValueError(f"counts sum to {int(counts.sum())}, expected {n_total}")
    return np.arcsin(np.sqrt(counts / n_total))


def sample(psi: QuantumState, n_shots: int, seed: int) -> SampleReport:
    counts = sample_counts(psi, n_shots, seed)
    return SampleReport(int(n_shots), tuple(int(c) for c in counts), tuple(estimate_angles(counts, int(n_shots))), seed)


def required_shots(n_qubits: int, delta_e: float) -> int:
    """ceil(2^n / delta_e^2).

    Evaluated exactly on the shortest decimal repr of ``delta_e``, so the
    ceiling is never bumped by rounding in ``delta_e ** 2``.
    """
    if int(n_qubits) != n_qubits or n_qubits < 1:
        raise ValueError(f"n_qubits must be a positive integer, got {n_qubits!r}")
    if not delta_e > 0 or not math.isfinite(delta_e):
        raise ValueError(f"delta_e must be positive, got {delta_e!r}")
    d = Fraction(repr(float(delta_e)))
    return math.ceil(Fraction(2 ** int(n_qubits)) / (d * d))


def true_angles(psi: QuantumState) -> np.ndarray:
    return np.arcsin(np.clip(np.abs(psi.amplitudes), 0.0, 1.0))


def max_angle_error(psi: QuantumState, n_shots: int, seed: int) -> float:
    counts = sample_counts(psi, n_shots, seed)
    return float(np.max(np.abs(estimate_angles(counts, int(n_shots)) - true_angles(psi))))


def rms_angle_error(psi: QuantumState, n_shots: int, seeds) -> float:
    """Root mean square of |alpha_hat_i - alpha_i| over seeds and basis indices."""
    truth = true_angles(psi)
    sq = [np.mean((estimate_angles(sample_counts(psi, n_shots, s), int(n_shots)) - truth) ** 2) for s in seeds]
    return float(math.sqrt(np.mean(sq)))
