"""In-process invariant suites run by ``ampbisect verify``."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import baseline, gates
from .bisection import SearchConfig, bound_for_iters, search_all, search_single
from .comparator import (
    ComparisonOutcome,
    compare_multi,
    compare_multi_full,
    compare_single,
    pipeline_trace,
)
from .generators import bell_times_product, generate_random_state, random_angles
from .separable import factor_product_state, product_state, search_separable
from .statevector import orthogonality_residual, prepare_from_angle

SEED = 20240229


@dataclass
class SuiteResult:
    name: str
    passed: bool
    seconds: float = 0.0
    details: dict = field(default_factory=dict)


def suite_gates() -> tuple[bool, dict]:
    z, h, x = (gates.standard_gate(g).entries for g in ("PauliZ", "Hadamard", "PauliX"))
    dev = max(
        float(np.max(np.abs(gates.rotation_c(b).entries - ref)))
        for b, ref in ((0.0, z), (math.pi / 4, h), (math.pi / 2, x))
    )
    resid = orthogonality_residual(gates.operator_a().entries)
    return dev <= 1e-15 and resid < 1e-14, {"rotation_identity_deviation": dev, "operator_a_orthogonality_residual": resid}


def suite_pipeline(samples: int = 1000) -> tuple[bool, dict]:
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for a, b in rng.uniform(0.0, math.pi / 2, (samples, 2)):
        tr = pipeline_trace(prepare_from_angle(a), None, b)
        closed = np.array([math.cos(a + b), math.sin(a + b), math.sin(a - b), math.cos(a - b)]) / math.sqrt(2)
        worst = max(worst, float(np.max(np.abs(tr.phi2.amplitudes - closed))))
    return worst <= 1e-12, {"samples": samples, "max_deviation": worst}


def suite_error_bound(samples: int = 1000, ms=(5, 10, 20)) -> tuple[bool, dict]:
    rng = np.random.default_rng(SEED + 1)
    alphas = rng.uniform(0.0, math.pi / 2, samples)
    ok = True
    details = {"samples": samples}
    for m in ms:
        cfg = SearchConfig(iterations=m)
        worst = max(search_single(prepare_from_angle(a), cfg).error(a) for a in alphas)
        details[f"m{m}_max_error"] = worst
        details[f"m{m}_bound"] = bound_for_iters(m)
        ok &= worst <= bound_for_iters(m) + 1e-12
    return ok, details


def suite_multipartite(n: int = 8, m: int = 20) -> tuple[bool, dict]:
    psi = generate_random_state(n, SEED + 2)
    results = search_all(psi, SearchConfig(iterations=m))
    worst = max(abs(r.amplitude_hat - a) for r, a in zip(results, psi.amplitudes))
    calls = sum(r.oracle_calls for r in results)
    return worst <= bound_for_iters(m) and calls == m * psi.dim, {
        "n_qubits": n, "max_amplitude_error": worst, "oracle_calls": calls,
    }


def suite_reduced_full(samples: int = 100) -> tuple[bool, dict]:
    rng = np.random.default_rng(SEED + 3)
    mismatches, worst = 0, 0.0
    for i in range(samples):
        n = int(rng.integers(1, 7))
        psi = generate_random_state(n, int(rng.integers(2 ** 32)))
        k = int(rng.integers(psi.dim))
        beta = float(rng.uniform(0.0, math.pi / 2))
        full = compare_multi_full(psi, k, beta)
        reduced = pipeline_trace(psi, k, beta)
        mismatches += full.outcome is not compare_multi(psi, k, beta)
        worst = max(worst, float(np.max(np.abs(full.effective_coefficients - reduced.phi2.amplitudes))))
    return mismatches == 0 and worst <= 1e-12, {"samples": samples, "mismatches": mismatches, "max_deviation": worst}


def suite_oracle_grid(points: int = 181, eq_tol: float = 1e-3) -> tuple[bool, dict]:
    delta = math.asin(math.sqrt(2) * eq_tol)
    grid = np.linspace(0.0, math.pi / 2, points)
    wrong = 0
    for a in grid:
        psi = prepare_from_angle(a)
        for b in grid:
            gap = a - b
            if abs(abs(gap) - delta) < 1e-9:
                continue
            expect = (
                ComparisonOutcome.EQUAL_WITHIN_TOL if abs(gap) <= delta
                else ComparisonOutcome.HIDDEN_GREATER if gap > 0 else ComparisonOutcome.HIDDEN_LESS
            )
            wrong += compare_single(psi, b, eq_tol) is not expect
    return wrong == 0, {"grid_points": points * points, "wrong": wrong}


def suite_separable(n: int = 16, m: int = 20) -> tuple[bool, dict]:
    rng = np.random.default_rng(SEED + 4)
    angles = random_angles(n, rng)
    results = search_separable(product_state(angles), SearchConfig(iterations=m))
    worst = max(abs(r.theta_hat - t) for r, t in zip(results, angles))
    calls = sum(r.oracle_calls for r in results)
    return worst <= bound_for_iters(m) and calls == n * m, {
        "n_qubits": n, "max_angle_error": worst, "oracle_calls": calls, "per_k_oracle_calls": m * 2 ** n,
    }


def suite_factorization(samples: int = 100) -> tuple[bool, dict]:
    rng = np.random.default_rng(SEED + 5)
    missed, worst, accepted = 0, 0.0, 0
    for _ in range(samples):
        angles = random_angles(int(rng.integers(1, 11)), rng)
        got = factor_product_state(product_state(angles))
        if got is None:
            missed += 1
        else:
            worst = max(worst, float(np.max(np.abs(np.array(got.angles) - angles))))
        accepted += factor_product_state(bell_times_product(int(rng.integers(2, 11)), rng)) is not None
    ok = missed == 0 and accepted == 0 and worst <= 1e-10
    return ok, {"product_missed": missed, "entangled_accepted": accepted, "max_angle_error": worst}


def suite_baseline(trials: int = 200, n: int = 2, delta_e: float = 0.05) -> tuple[bool, dict]:
    psi = generate_random_state(n, SEED + 6)
    shots = baseline.required_shots(n, delta_e)
    hits = sum(baseline.max_angle_error(psi, shots, s) <= delta_e for s in range(trials))
    return hits >= 0.95 * trials, {"shots": shots, "fraction_within": hits / trials}


SUITES = {
    "gates": suite_gates,
    "pipeline": suite_pipeline,
    "error_bound": suite_error_bound,
    "oracle_grid": suite_oracle_grid,
    "multipartite": suite_multipartite,
    "reduced_full": suite_reduced_full,
    "separable": suite_separable,
    "factorization": suite_factorization,
    "baseline": suite_baseline,
}


def run_verify(names=None) -> list[SuiteResult]:
    out = []
    for name in names or SUITES:
        t0 = time.perf_counter()
        try:
            passed, details = SUITES[name]()
        except Exception as exc:  # a crashing suite is a failing suite
            passed, details = False, {"error": f"{type(exc).__name__}: {exc}"}
        out.append(SuiteResult(name, bool(passed), time.perf_counter() - t0, details))
    return out
