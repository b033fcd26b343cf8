"""Test-input states: seeded random nonnegative states and FRQI-style product states."""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .separable import product_state
from .statevector import DomainError, QuantumState, prepare_from_amplitudes


def generate_random_state(n_qubits: int, seed: int) -> QuantumState:
    """Uniform [0, 1) amplitudes, normalized. Deterministic per seed."""
    if int(n_qubits) != n_qubits or n_qubits < 1:
        raise ValueError(f"n_qubits must be a positive integer, got {n_qubits!r}")
    rng = np.random.default_rng(seed)
    amps = rng.uniform(0.0, 1.0, 2 ** int(n_qubits))
    while not amps.any():
        amps = rng.uniform(0.0, 1.0, amps.size)
    return prepare_from_amplitudes(amps, require_nonnegative=True)


def generate_frqi_state(angles: Sequence[float]) -> QuantumState:
    """Product of cos(t)|0> + sin(t)|1> over the given per-qubit angles."""
    angles = [float(t) for t in angles]
    bad = [t for t in angles if not 0.0 <= t <= math.pi / 2]
    if bad:
        raise DomainError(f"angles must lie in [0, pi/2]: {bad}")
    return product_state(angles)


def random_angles(n: int, rng: np.random.Generator) -> list[float]:
    return list(rng.uniform(0.0, math.pi / 2, n))


def bell_times_product(n_qubits: int, rng: np.random.Generator) -> QuantumState:
    """(|00> + |11>)/sqrt(2) on the first two qubits, random product on the rest."""
    if n_qubits < 2:
        raise ValueError("need at least two qubits for a Bell pair")
    bell = np.array([1.0, 0.0, 0.0, 1.0]) / math.sqrt(2.0)
    if n_qubits == 2:
        return QuantumState(2, bell)
    rest = product_state(random_angles(n_qubits - 2, rng))
    return QuantumState(n_qubits, np.kron(bell, rest.amplitudes))
