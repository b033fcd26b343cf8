"""Experiment runners behind the command line: estimate, sample, compare."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Optional

from . import baseline
from .bisection import SearchConfig, iters_for_error, search_all, search_multi, search_single
from .comparator import hidden_angle
from .files import SCHEMA_VERSION, load_angles, load_state
from .generators import generate_frqi_state, generate_random_state
from .separable import factor_product_state, search_separable
from .statevector import BasisIndex, QuantumState

MODES = ("estimate-single", "estimate-multi", "estimate-separable", "sample", "compare")

ESTIMATE_COLUMNS = (
    "schema_version", "kind", "mode", "k", "qubit", "theta_hat", "amplitude_hat", "oracle_calls",
    "gate_ops", "iterations_used", "converged_exact", "bound", "true_theta", "true_amplitude",
    "true_error", "amplitude_error",
)
SAMPLE_COLUMNS = (
    "schema_version", "kind", "k", "total_shots", "seed", "count", "frequency", "alpha_hat",
    "true_alpha", "error",
)
COMPARE_COLUMNS = (
    "schema_version", "kind", "k", "delta_e", "n_qubits", "iterations", "true_theta",
    "bisection_theta", "bisection_error", "bisection_oracle_calls", "baseline_shots",
    "baseline_theta", "baseline_error",
)

COMPARE_NOTES = (
    "baseline: delta_e is the per-angle error target used in the shot budget ceil(2^n / delta_e^2)",
    "bisection: delta_e is the worst-case angle error pi/2^(m+1); m = smallest such count",
    "each oracle call consumes one preparation of the measured state",
)


@dataclass
class ExperimentSpec:
    mode: str
    state_path: Optional[str] = None
    random: Optional[tuple] = None  # (n_qubits, seed)
    frqi_path: Optional[str] = None
    k: Optional[int] = None
    all_k: bool = False
    iterations: Optional[int] = None
    target_error: Optional[float] = None
    init: str = "midpoint"
    beta0: Optional[float] = None
    seed: int = 0
    shots: Optional[int] = None
    fmt: str = "json-lines"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        sources = [s for s in (self.state_path, self.random, self.frqi_path) if s is not None]
        if len(sources) != 1:
            raise ValueError("give exactly one state source (state file, random spec or FRQI angles)")
        if self.fmt not in ("json-lines", "csv"):
            raise ValueError(f"format must be json-lines or csv, got {self.fmt!r}")
        if self.k is not None and self.all_k:
            raise ValueError("give --k or --all-k, not both")
        if self.mode.startswith("estimate"):
            if (self.iterations is None) == (self.target_error is None):
                raise ValueError("estimate needs exactly one of iterations or target error")
        if self.mode == "compare" and self.target_error is None:
            raise ValueError("compare needs a target error")
        if self.mode == "sample" and self.shots is None and self.target_error is None:
            raise ValueError("sample needs a shot count or a target error")

    def load(self) -> QuantumState:
        if self.state_path is not None:
            return load_state(self.state_path)
        if self.random is not None:
            n, seed = self.random
            return generate_random_state(n, seed)
        return generate_frqi_state(load_angles(self.frqi_path))

    def search_config(self, target_error: Optional[float] = None) -> SearchConfig:
        return SearchConfig(
            iterations=self.iterations,
            target_error=self.target_error if target_error is None else target_error,
            init=self.init,
            beta0=self.beta0,
            seed=self.seed if self.init == "random" else None,
        )


def _estimate_record(mode, result, true_theta, k=None, qubit=None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "estimate",
        "mode": mode,
        "k": k,
        "qubit": qubit,
        "theta_hat": result.theta_hat,
        "amplitude_hat": result.amplitude_hat,
        "oracle_calls": result.oracle_calls,
        "gate_ops": result.gate_ops,
        "iterations_used": result.iterations_used,
        "converged_exact": result.converged_exact,
        "bound": result.bound,
        "true_theta": true_theta,
        "true_amplitude": math.sin(true_theta),
        "true_error": abs(result.theta_hat - true_theta),
        "amplitude_error": abs(result.amplitude_hat - math.sin(true_theta)),
    }


def target_indices(spec: ExperimentSpec, psi: QuantumState) -> list[int]:
    if spec.k is not None:
        return [int(BasisIndex(spec.k, psi.num_qubits))]
    return list(range(psi.dim))


def _search_indices(psi: QuantumState, indices: list[int], config: SearchConfig):
    if len(indices) == psi.dim:
        return search_all(psi, config)
    return [search_multi(psi, k, config) for k in indices]


def run_estimate(spec: ExperimentSpec, psi: Optional[QuantumState] = None) -> list[dict]:
    psi = spec.load() if psi is None else psi
    config = spec.search_config()
    if spec.mode == "estimate-single":
        if psi.num_qubits != 1:
            raise ValueError(f"estimate-single needs a 1-qubit state, got {psi.num_qubits} qubits")
        return [_estimate_record(spec.mode, search_single(psi, config), hidden_angle(psi), k=1)]
    if spec.mode == "estimate-multi":
        if spec.k is None and not spec.all_k:
            raise ValueError("estimate-multi needs --k or --all-k")
        indices = target_indices(spec, psi)
        return [
            _estimate_record(spec.mode, r, hidden_angle(psi, k), k=k)
            for k, r in zip(indices, _search_indices(psi, indices, config))
        ]
    if spec.mode == "estimate-separable":
        # raises NotSeparableError for entangled input
        results = search_separable(psi, config)
        angles = factor_product_state(psi).angles
        return [
            _estimate_record(spec.mode, r, angles[q], qubit=q) for q, r in enumerate(results)
        ]
    raise ValueError(f"not an estimate mode: {spec.mode!r}")


def run_sample(spec: ExperimentSpec, psi: Optional[QuantumState] = None) -> list[dict]:
    psi = spec.load() if psi is None else psi
    shots = spec.shots if spec.shots is not None else baseline.required_shots(psi.num_qubits, spec.target_error)
    report = baseline.sample(psi, shots, spec.seed)
    truth = baseline.true_angles(psi)
    return [
        {
            "schema_version": SCHEMA_VERSION,
            "kind": "sample",
            "k": k,
            "total_shots": report.total_shots,
            "seed": spec.seed,
            "count": report.counts[k],
            "frequency": report.counts[k] / report.total_shots,
            "alpha_hat": report.angle_estimates[k],
            "true_alpha": truth[k],
            "error": abs(report.angle_estimates[k] - truth[k]),
        }
        for k in range(psi.dim)
    ]


@dataclass
class ComparisonReport:
    delta_e: float
    n_qubits: int
    iterations: int
    indices: list
    bisection_oracle_calls: int
    bisection_gate_ops: int
    bisection_state_preparations: int
    baseline_required_shots: int
    analytic_ratio: float
    true_thetas: list
    bisection_thetas: list
    baseline_thetas: list
    oracle_calls_by_k: list
    seed: int
    wall_time: dict = field(default_factory=dict)

    @property
    def bisection_errors(self) -> list:
        return [abs(a - b) for a, b in zip(self.bisection_thetas, self.true_thetas)]

    @property
    def baseline_errors(self) -> list:
        return [abs(a - b) for a, b in zip(self.baseline_thetas, self.true_thetas)]

    def call_budget(self) -> int:
        return iters_for_error(self.delta_e) * len(self.indices)

    def header(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "kind": "header", "notes": list(COMPARE_NOTES)}

    def summary(self) -> dict:
        b_err, s_err = self.bisection_errors, self.baseline_errors
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "summary",
            "delta_e": self.delta_e,
            "n_qubits": self.n_qubits,
            "iterations": self.iterations,
            "amplitudes_estimated": len(self.indices),
            "bisection_oracle_calls": self.bisection_oracle_calls,
            "bisection_gate_ops": self.bisection_gate_ops,
            "bisection_state_preparations": self.bisection_state_preparations,
            "bisection_max_error": max(b_err),
            "baseline_required_shots": self.baseline_required_shots,
            "baseline_max_error": max(s_err),
            "baseline_fraction_within_delta_e": sum(e <= self.delta_e for e in s_err) / len(s_err),
            "analytic_ratio": self.analytic_ratio,
            "seed": self.seed,
        }

    def rows(self) -> list[dict]:
        return [
            {
                "schema_version": SCHEMA_VERSION,
                "kind": "amplitude",
                "k": k,
                "delta_e": self.delta_e,
                "n_qubits": self.n_qubits,
                "iterations": self.iterations,
                "true_theta": t,
                "bisection_theta": b,
                "bisection_error": abs(b - t),
                "bisection_oracle_calls": self.oracle_calls_by_k[i],
                "baseline_shots": self.baseline_required_shots,
                "baseline_theta": s,
                "baseline_error": abs(s - t),
            }
            for i, (k, t, b, s) in enumerate(
                zip(self.indices, self.true_thetas, self.bisection_thetas, self.baseline_thetas)
            )
        ]

    def body(self) -> list[dict]:
        """Deterministic part of the report (no wall times)."""
        return [self.header(), self.summary(), *self.rows()]

    def timing(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "kind": "timing", **self.wall_time}


def run_compare(spec: ExperimentSpec, psi: Optional[QuantumState] = None) -> ComparisonReport:
    psi = spec.load() if psi is None else psi
    delta_e = spec.target_error
    m = iters_for_error(delta_e)
    config = spec.search_config(target_error=delta_e)
    indices = target_indices(spec, psi)
    truth = [hidden_angle(psi, k) for k in indices]

    t0 = time.perf_counter()
    results = _search_indices(psi, indices, config)
    t_bisect = time.perf_counter() - t0

    shots = baseline.required_shots(psi.num_qubits, delta_e)
    t0 = time.perf_counter()
    counts = baseline.sample_counts(psi, shots, spec.seed)
    angles = baseline.estimate_angles(counts, shots)
    t_base = time.perf_counter() - t0

    calls = sum(r.oracle_calls for r in results)
    return ComparisonReport(
        delta_e=delta_e,
        n_qubits=psi.num_qubits,
        iterations=m,
        indices=indices,
        bisection_oracle_calls=calls,
        bisection_gate_ops=sum(r.gate_ops for r in results),
        bisection_state_preparations=calls,
        baseline_required_shots=shots,
        analytic_ratio=shots / (2 ** psi.num_qubits * m),
        true_thetas=truth,
        bisection_thetas=[r.theta_hat for r in results],
        baseline_thetas=[float(angles[k]) for k in indices],
        seed=spec.seed,
        wall_time={"bisection_seconds": t_bisect, "baseline_seconds": t_base},
        oracle_calls_by_k=[r.oracle_calls for r in results],
    )
