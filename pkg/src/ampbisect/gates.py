"""Fixed operators: H, X, Z, the reflection-rotation C(2*beta) and the
4x4 angle-adder A, plus A embedded into the full (n+1)-qubit space."""
from __future__ import annotations

import enum
import math
import warnings

import numpy as np

from .statevector import BasisIndex, DomainError, LinearOperator, QuantumState

INV_SQRT2 = 1.0 / math.sqrt(2.0)
_RESIDUAL_TOL = 1e-15


class GateName(enum.Enum):
    HADAMARD = "Hadamard"
    PAULI_X = "PauliX"
    PAULI_Z = "PauliZ"


class AngleRangeWarning(UserWarning):
    """Angle accepted but outside [0, pi/2]."""


# Third row is (0, -1, 1, 0): it must produce sin(alpha - beta) so that a
# positive |10> coefficient means the hidden angle is the larger one.
_A_ENTRIES = INV_SQRT2 * np.array(
    [
        [1.0, 0.0, 0.0, -1.0],
        [0.0, 1.0, 1.0, 0.0],
        [0.0, -1.0, 1.0, 0.0],
        [1.0, 0.0, 0.0, 1.0],
    ]
)


def standard_gate(name: GateName | str) -> LinearOperator:
    name = GateName(name)
    if name is GateName.HADAMARD:
        m = INV_SQRT2 * np.array([[1.0, 1.0], [1.0, -1.0]])
    elif name is GateName.PAULI_X:
        m = np.array([[0.0, 1.0], [1.0, 0.0]])
    else:
        m = np.array([[1.0, 0.0], [0.0, -1.0]])
    return LinearOperator(m, orthogonal=True, name=name.value)


def rotation_c(beta: float) -> LinearOperator:
    """C(2*beta) = [[cos b, sin b], [sin b, -cos b]].

    beta = 0, pi/4, pi/2 give Z, H and X. Angles outside [0, pi/2] are
    accepted with an :class:`AngleRangeWarning`.
    """
    if not 0.0 <= beta <= math.pi / 2:
        warnings.warn(f"beta={beta!r} is outside [0, pi/2]", AngleRangeWarning, stacklevel=2)
    c, s = math.cos(beta), math.sin(beta)
    return LinearOperator(np.array([[c, s], [s, -c]]), orthogonal=True, name=f"C(2*{beta!r})")


def operator_a() -> LinearOperator:
    return LinearOperator(_A_ENTRIES, orthogonal=True, name="A")


def effective_basis(psi: QuantumState, k: int | BasisIndex) -> np.ndarray:
    """Columns |phi>|0>, |phi>|1>, |k>|0>, |k>|1> in the (n+1)-qubit space.

    |phi> is the renormalized restriction of ``psi`` to indices other than
    ``k``. When that restriction vanishes (a_k = 1) the lowest basis state
    different from ``k`` stands in for |phi>.
    """
    k = int(BasisIndex(int(k), psi.num_qubits))
    rest = np.array(psi.amplitudes, dtype=float)
    rest[k] = 0.0
    norm = float(np.linalg.norm(rest))
    if norm <= _RESIDUAL_TOL:
        rest[:] = 0.0
        rest[1 if k == 0 else 0] = 1.0
    else:
        rest /= norm
    e_k = np.zeros(psi.dim)
    e_k[k] = 1.0
    ket0, ket1 = np.array([1.0, 0.0]), np.array([0.0, 1.0])
    return np.column_stack([np.kron(rest, ket0), np.kron(rest, ket1), np.kron(e_k, ket0), np.kron(e_k, ket1)])


def embed_a(psi: QuantumState, k: int | BasisIndex) -> LinearOperator:
    """A acting on the effective basis of (psi, k), identity elsewhere."""
    if not psi.is_nonnegative():
        raise DomainError("embed_a requires a state with nonnegative amplitudes")
    v = effective_basis(psi, k)
    full = np.eye(v.shape[0]) - v @ v.T + v @ _A_ENTRIES @ v.T
    return LinearOperator(full, orthogonal=True, name=f"A[k={int(k)}]")
