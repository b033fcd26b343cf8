"""One-call comparison oracle.

Given the hidden angle (alpha of a single qubit, or theta with
sin(theta) = a_k for basis state k of a larger register) and a trial angle
beta, the pipeline

    |0> --C(2 beta)--> phi0,   psi (x) phi0 -> phi1,   A phi1 -> phi2,
    project phi2 onto |k>|0>   -> phi3

leaves amplitude sin(theta - beta)/sqrt(2) on |k>|0>. Its sign says which
angle is larger; a (numerically) zero projection means they are equal.

Three routes compute the same thing:

* ``pipeline_trace``: every intermediate as a :class:`QuantumState`, in
  the reduced two-qubit effective basis.
* ``compare_single`` / ``compare_multi``: the same arithmetic on plain
  floats, used by the search loop.
* ``compare_multi_full``: the (n+1)-qubit space with :func:`embed_a`.
  Verification only.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import gates
from .statevector import (
    BasisIndex,
    DomainError,
    Projector,
    QuantumState,
    apply,
    basis_state,
    project_and_renormalize,
    tensor,
)

DEFAULT_EQ_TOL = 1e-12
# rotation C(2 beta) and the adder A; tensor and projection are not gates
GATE_APPLICATIONS_PER_CALL = 2


class ComparisonOutcome(enum.Enum):
    EQUAL_WITHIN_TOL = 0
    HIDDEN_GREATER = 1
    HIDDEN_LESS = -1


@dataclass(frozen=True)
class PipelineTrace:
    phi0: QuantumState
    phi1: QuantumState
    phi2: QuantumState
    phi3: Optional[QuantumState]
    projection_weight: float
    projected_amplitude: float


# row of A producing the |k>|0> coefficient
_A_ROW = tuple(float(x) for x in gates.operator_a().entries[2])


def _check_beta(beta: float) -> None:
    if not 0.0 <= beta <= math.pi / 2:
        raise DomainError(f"beta must lie in [0, pi/2], got {beta!r}")


def _check_tol(eq_tol: float) -> None:
    if not eq_tol > 0:
        raise ValueError("eq_tol must be positive")


def reduced_coordinates(psi: QuantumState, k: int | BasisIndex | None = None) -> tuple[float, float]:
    """(cos theta, sin theta) of psi in the effective basis {|phi>, |k>}.

    ``k=None`` means psi is a single qubit, taken as is.
    """
    if not psi.is_nonnegative():
        raise DomainError("comparison requires nonnegative amplitudes")
    if k is None:
        if psi.num_qubits != 1:
            raise ValueError("single-qubit comparison needs a 1-qubit state; pass k for larger states")
        return float(psi[0]), float(psi[1])
    k = int(BasisIndex(int(k), psi.num_qubits))
    sq = psi.amplitudes ** 2
    rest = float(np.sqrt(sq[:k].sum() + sq[k + 1:].sum()))
    return rest, float(psi[k])


def hidden_angle(psi: QuantumState, k: int | BasisIndex | None = None) -> float:
    cos_t, sin_t = reduced_coordinates(psi, k)
    return math.atan2(sin_t, cos_t)


def projected_amplitude(cos_t: float, sin_t: float, beta: float) -> float:
    """Coefficient of |k>|0> after rotation, tensor and A, on plain floats."""
    c, s = math.cos(beta), math.sin(beta)
    phi1 = (cos_t * c, cos_t * s, sin_t * c, sin_t * s)
    return math.fsum(a * x for a, x in zip(_A_ROW, phi1))


def _outcome(amplitude: float, eq_tol: float) -> ComparisonOutcome:
    if abs(amplitude) <= eq_tol:
        return ComparisonOutcome.EQUAL_WITHIN_TOL
    return ComparisonOutcome.HIDDEN_GREATER if amplitude > 0 else ComparisonOutcome.HIDDEN_LESS


def compare_reduced(cos_t: float, sin_t: float, beta: float, eq_tol: float = DEFAULT_EQ_TOL) -> ComparisonOutcome:
    return _outcome(projected_amplitude(cos_t, sin_t, beta), eq_tol)


def compare_single(psi: QuantumState, beta: float, eq_tol: float = DEFAULT_EQ_TOL) -> ComparisonOutcome:
    _check_beta(beta)
    _check_tol(eq_tol)
    return compare_reduced(*reduced_coordinates(psi), beta, eq_tol)


def compare_multi(
    psi: QuantumState, k: int | BasisIndex, beta: float, eq_tol: float = DEFAULT_EQ_TOL
) -> ComparisonOutcome:
    _check_beta(beta)
    _check_tol(eq_tol)
    return compare_reduced(*reduced_coordinates(psi, k), beta, eq_tol)


def pipeline_trace(psi: QuantumState, k: int | BasisIndex | None, beta: float) -> PipelineTrace:
    """Run the pipeline with explicit states and operators.

    For ``k`` given, the hidden register is first reduced to the effective
    qubit cos(theta)|phi> + sin(theta)|k>, so all states are two-qubit and
    the |k>|0> projector is basis index 2.
    """
    _check_beta(beta)
    cos_t, sin_t = reduced_coordinates(psi, k)
    hidden = psi if k is None else QuantumState(1, np.array([cos_t, sin_t]))
    phi0 = apply(gates.rotation_c(beta), basis_state(0, 1))
    phi1 = tensor(hidden, phi0)
    phi2 = apply(gates.operator_a(), phi1)
    phi3, weight = project_and_renormalize(Projector.onto([2], 4), phi2)
    return PipelineTrace(phi0, phi1, phi2, phi3, weight, float(phi2[2]))


def outcome_from_trace(trace: PipelineTrace, eq_tol: float = DEFAULT_EQ_TOL) -> ComparisonOutcome:
    return _outcome(trace.projected_amplitude, eq_tol)


@dataclass(frozen=True)
class FullSpaceResult:
    outcome: ComparisonOutcome
    phi2: QuantumState
    effective_coefficients: np.ndarray
    projection_weight: float


def compare_multi_full(
    psi: QuantumState, k: int | BasisIndex, beta: float, eq_tol: float = DEFAULT_EQ_TOL
) -> FullSpaceResult:
    """Same comparison carried out in the full 2^(n+1)-dimensional space."""
    _check_beta(beta)
    _check_tol(eq_tol)
    k = int(BasisIndex(int(k), psi.num_qubits))
    phi0 = apply(gates.rotation_c(beta), basis_state(0, 1))
    phi1 = tensor(psi, phi0)
    phi2 = apply(gates.embed_a(psi, k), phi1)
    target = Projector.onto([2 * k], phi2.dim)
    phi3, weight = project_and_renormalize(target, phi2, eps=eq_tol ** 2)
    if phi3 is None:
        outcome = ComparisonOutcome.EQUAL_WITHIN_TOL
    else:
        outcome = ComparisonOutcome.HIDDEN_GREATER if phi3[2 * k] > 0 else ComparisonOutcome.HIDDEN_LESS
    coeffs = gates.effective_basis(psi, k).T @ phi2.amplitudes
    return FullSpaceResult(outcome, phi2, coeffs, weight)
