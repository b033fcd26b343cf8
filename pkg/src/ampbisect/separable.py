"""Product-state detection and per-qubit angle search."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .bisection import SearchConfig, SearchResult, search_single
from .statevector import DomainError, QuantumState, prepare_from_angle, tensor

RANK_ONE_TOL = 1e-9


class NotSeparableError(ValueError):
    pass


@dataclass(frozen=True)
class FactorAngles:
    angles: tuple

    def __len__(self) -> int:
        return len(self.angles)

    def state(self) -> QuantumState:
        return product_state(self.angles)


def product_state(angles: Sequence[float]) -> QuantumState:
    """Tensor product of cos(t)|0> + sin(t)|1> over ``angles``, first angle most significant."""
    if len(angles) == 0:
        raise ValueError("need at least one angle")
    out = prepare_from_angle(angles[0])
    for t in angles[1:]:
        out = tensor(out, prepare_from_angle(t))
    return out


def qubit_unfolding(psi: QuantumState, qubit: int) -> np.ndarray:
    """2 x 2^(n-1) matrix whose row index is the bit of ``qubit`` (0-based, most significant first)."""
    n = psi.num_qubits
    if not 0 <= qubit < n:
        raise ValueError(f"qubit {qubit} out of range for {n} qubits")
    t = psi.amplitudes.reshape((2,) * n)
    return np.moveaxis(t, qubit, 0).reshape(2, -1)


def second_singular_value(m: np.ndarray) -> float:
    sv = np.linalg.svd(m, compute_uv=False)
    return float(sv[1]) if sv.size > 1 else 0.0


def factor_product_state(psi: QuantumState, tol: float = RANK_ONE_TOL) -> Optional[FactorAngles]:
    """Return per-qubit angles if psi is a product of single-qubit states, else None.

    Each qubit's unfolding must have second singular value <= ``tol``; the
    angle is atan2 of the row norms, which lands in [0, pi/2] for
    nonnegative states.
    """
    if not psi.is_nonnegative():
        raise DomainError("factorization expects nonnegative amplitudes")
    angles = []
    for q in range(psi.num_qubits):
        unf = qubit_unfolding(psi, q)
        if second_singular_value(unf) > tol:
            return None
        r0, r1 = np.linalg.norm(unf, axis=1)
        angles.append(math.atan2(r1, r0))
    return FactorAngles(tuple(angles))


def search_separable(psi: QuantumState, config: SearchConfig) -> list[SearchResult]:
    """One single-qubit search per factor, qubit order; at most n*m oracle calls.

    Every factor search receives the same ``config`` (so the same seeded
    starting angle under random init).
    """
    factors = factor_product_state(psi)
    if factors is None:
        raise NotSeparableError("state is not a product of single-qubit states (factor_product_state returned None)")
    return [search_single(prepare_from_angle(t), config) for t in factors.angles]


def amplitude_from_angles(angles: Sequence[float], k: int) -> float:
    """a_k of the product state: product over qubits of cos or sin picked by the bits of k."""
    n = len(angles)
    out = 1.0
    for q, t in enumerate(angles):
        bit = (k >> (n - 1 - q)) & 1
        out *= math.sin(t) if bit else math.cos(t)
    return out
