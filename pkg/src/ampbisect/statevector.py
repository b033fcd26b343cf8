"""Real-valued state vectors, dense operators and projective measurement.

Basis ordering is big-endian: qubit 1 is the most significant bit, so the
two-register state |k>|b> (b a single ancilla qubit) lives at index 2k + b.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

NORM_TOL = 1e-10
ORTHO_TOL = 1e-12
NULL_EPS = 1e-12


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Unit-norm real amplitude vector over ``num_qubits`` qubits.

    The amplitude array is copied on construction and frozen.
    """

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=float)
        if amps.ndim != 1:
            raise ValueError("amplitudes must be a 1-D vector")
        if int(self.num_qubits) != self.num_qubits or self.num_qubits < 1:
            raise ValueError(f"num_qubits must be a positive integer, got {self.num_qubits}")
        if amps.size != 2 ** self.num_qubits:
            raise ValueError(
                f"expected {2 ** self.num_qubits} amplitudes for {self.num_qubits} qubits, got {amps.size}"
            )
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        norm2 = float(amps @ amps)
        if abs(norm2 - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized (norm^2 = {norm2!r})")
        amps.setflags(write=False)
        object.__setattr__(self, "num_qubits", int(self.num_qubits))
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def __len__(self) -> int:
        return self.dim

    def __getitem__(self, index):
        return self.amplitudes[index]

    def is_nonnegative(self) -> bool:
        return bool(np.all(self.amplitudes >= 0.0))

    def probabilities(self) -> np.ndarray:
        return self.amplitudes ** 2

    def allclose(self, other: "QuantumState", atol: float = 1e-12) -> bool:
        return self.dim == other.dim and bool(np.allclose(self.amplitudes, other.amplitudes, rtol=0, atol=atol))

    def __repr__(self) -> str:
        return f"QuantumState(num_qubits={self.num_qubits}, amplitudes={self.amplitudes.tolist()!r})"


@dataclass(frozen=True)
class BasisIndex:
    index: int
    num_qubits: int

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be positive")
        if not 0 <= self.index < 2 ** self.num_qubits:
            raise ValueError(f"basis index {self.index} out of range for {self.num_qubits} qubits")

    def __index__(self) -> int:
        return self.index

    def bits(self) -> tuple[int, ...]:
        """Bit string of the index, qubit 1 first."""
        return tuple((self.index >> (self.num_qubits - 1 - q)) & 1 for q in range(self.num_qubits))


@dataclass(frozen=True, eq=False)
class LinearOperator:
    """Dense real square matrix.

    When ``orthogonal`` is set the constructor checks ``M.T @ M == I``
    entrywise within ``ORTHO_TOL``.
    """

    entries: np.ndarray
    orthogonal: bool = False
    name: str = ""

    def __post_init__(self):
        m = np.array(self.entries, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise ValueError(f"operator must be a non-empty square matrix, got shape {m.shape}")
        if self.orthogonal:
            resid = orthogonality_residual(m)
            if resid > ORTHO_TOL:
                raise ValueError(f"operator {self.name or ''} is not orthogonal (residual {resid:.3e})")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(self.entries @ other.entries, self.orthogonal and other.orthogonal)


def orthogonality_residual(m) -> float:
    """Largest entrywise deviation of ``m.T @ m`` from the identity."""
    m = np.asarray(m, dtype=float)
    return float(np.max(np.abs(m.T @ m - np.eye(m.shape[0]))))


@dataclass(frozen=True)
class Projector:
    """Diagonal 0/1 projector onto a set of computational-basis states."""

    basis_indices: frozenset
    dim: int

    def __post_init__(self):
        idx = frozenset(int(i) for i in self.basis_indices)
        if any(i < 0 or i >= self.dim for i in idx):
            raise ValueError(f"projector indices out of range for dimension {self.dim}")
        object.__setattr__(self, "basis_indices", idx)

    @classmethod
    def onto(cls, indices: Iterable[int], dim: int) -> "Projector":
        return cls(frozenset(indices), dim)

    def complement(self) -> "Projector":
        return Projector(frozenset(range(self.dim)) - self.basis_indices, self.dim)

    def matrix(self) -> np.ndarray:
        diag = np.zeros(self.dim)
        diag[sorted(self.basis_indices)] = 1.0
        return np.diag(diag)

    def mask(self) -> np.ndarray:
        mask = np.zeros(self.dim, dtype=bool)
        mask[sorted(self.basis_indices)] = True
        return mask


def prepare_from_angle(alpha: float) -> QuantumState:
    """Single-qubit state cos(alpha)|0> + sin(alpha)|1>, alpha in [0, pi/2]."""
    if not 0.0 <= alpha <= math.pi / 2:
        raise DomainError(f"alpha must lie in [0, pi/2], got {alpha!r}")
    return QuantumState(1, np.array([math.cos(alpha), math.sin(alpha)]))


def prepare_from_amplitudes(amps: Sequence[float], require_nonnegative: bool = False) -> QuantumState:
    """Build a state from raw amplitudes.

    Any nonzero vector is rescaled to unit norm, so files written with
    limited precision load cleanly; vectors already unit to within a few
    ulps are kept bit for bit. The all-zero vector, non-power-of-two
    lengths and (with ``require_nonnegative``) negative entries are rejected.
    """
    v = np.array(amps, dtype=float).ravel()
    if not _is_power_of_two(v.size):
        raise ValueError(f"amplitude count must be a power of two, got {v.size}")
    if not np.all(np.isfinite(v)):
        raise ValueError("amplitudes must be finite")
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise ValueError("zero vector is not a quantum state")
    if require_nonnegative and np.any(v < 0):
        raise DomainError("negative amplitude in a state that must be nonnegative")
    if abs(norm - 1.0) > 4 * np.finfo(float).eps:
        v = v / norm
    return QuantumState(v.size.bit_length() - 1, v)


def basis_state(index: int, num_qubits: int) -> QuantumState:
    BasisIndex(index, num_qubits)
    v = np.zeros(2 ** num_qubits)
    v[index] = 1.0
    return QuantumState(num_qubits, v)


def tensor(a: QuantumState, b: QuantumState) -> QuantumState:
    """Kronecker product with ``a`` as the most significant register."""
    return QuantumState(a.num_qubits + b.num_qubits, np.kron(a.amplitudes, b.amplitudes))


def apply(op: LinearOperator, state: QuantumState) -> QuantumState:
    if op.dim != state.dim:
        raise ValueError(f"operator dimension {op.dim} does not match state dimension {state.dim}")
    if not op.orthogonal:
        raise ValueError("only operators flagged orthogonal may be applied to states")
    return QuantumState(state.num_qubits, op.entries @ state.amplitudes)


def inner(a: QuantumState, b: QuantumState) -> float:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return float(a.amplitudes @ b.amplitudes)


def project_and_renormalize(p: Projector, state: QuantumState, eps: float = NULL_EPS):
    """Von Neumann measurement with a diagonal projector.

    Returns ``(post_state, weight)`` where ``weight`` is the squared norm of
    the projected vector. If ``weight <= eps`` the projection is treated as
    the zero vector and ``post_state`` is ``None``. Signs of the surviving
    amplitudes are kept, so ``+|x>`` and ``-|x>`` stay distinguishable.
    """
    if p.dim != state.dim:
        raise ValueError(f"projector dimension {p.dim} does not match state dimension {state.dim}")
    if eps <= 0:
        raise ValueError("eps must be positive")
    projected = np.where(p.mask(), state.amplitudes, 0.0)
    weight = float(projected @ projected)
    if weight <= eps:
        return None, weight
    return QuantumState(state.num_qubits, projected / math.sqrt(weight)), weight
