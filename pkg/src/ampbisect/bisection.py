"""Binary search for the hidden angle using the comparison oracle."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .comparator import (
    DEFAULT_EQ_TOL,
    GATE_APPLICATIONS_PER_CALL,
    ComparisonOutcome,
    compare_reduced,
    reduced_coordinates,
)
from .statevector import BasisIndex, DomainError, QuantumState

HALF_PI = math.pi / 2
INIT_MODES = ("midpoint", "fixed", "random")


def bound_for_iters(m: int) -> float:
    """Worst-case angle error pi / 2^(m+1) after m midpoint-started halvings."""
    if int(m) != m or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    return math.pi / 2 ** (int(m) + 1)


def iters_for_error(delta_e: float) -> int:
    """Smallest m >= 1 with pi / 2^(m+1) <= delta_e."""
    if not 0.0 < delta_e <= HALF_PI:
        raise ValueError(f"delta_e must lie in (0, pi/2], got {delta_e!r}")
    m = 1
    while bound_for_iters(m) > delta_e:
        m += 1
    return m


@dataclass(frozen=True)
class SearchConfig:
    """Search parameters.

    ``init`` is ``"midpoint"`` (beta0 = pi/4), ``"fixed"`` (uses ``beta0``)
    or ``"random"`` (beta0 uniform on [0, pi/2] from ``seed``). Give
    ``iterations`` or ``target_error``; if both are set the target error
    decides and the iteration count is derived from it.
    """

    iterations: Optional[int] = None
    target_error: Optional[float] = None
    init: str = "midpoint"
    beta0: Optional[float] = None
    seed: Optional[int] = None
    eq_tol: float = DEFAULT_EQ_TOL

    def __post_init__(self):
        if self.init not in INIT_MODES:
            raise ValueError(f"init must be one of {INIT_MODES}, got {self.init!r}")
        if self.iterations is None and self.target_error is None:
            raise ValueError("give either iterations or target_error")
        if self.target_error is not None:
            iters_for_error(self.target_error)
        elif int(self.iterations) != self.iterations or self.iterations < 1:
            raise ValueError(f"iterations must be a positive integer, got {self.iterations!r}")
        if self.init == "fixed":
            if self.beta0 is None or not 0.0 <= self.beta0 <= HALF_PI:
                raise DomainError(f"fixed init needs beta0 in [0, pi/2], got {self.beta0!r}")
        if self.init == "random" and self.seed is None:
            raise ValueError("random init needs a seed")
        if not self.eq_tol > 0:
            raise ValueError("eq_tol must be positive")

    @property
    def m(self) -> int:
        if self.target_error is not None:
            return iters_for_error(self.target_error)
        return int(self.iterations)

    def initial_beta(self) -> float:
        if self.init == "midpoint":
            return math.pi / 4
        if self.init == "fixed":
            return float(self.beta0)
        return float(np.random.default_rng(self.seed).uniform(0.0, HALF_PI))

    def guaranteed_bound(self) -> float:
        """Angle error bound: pi/2^(m+1) from the midpoint, pi/2^m otherwise."""
        m = self.m
        return bound_for_iters(m) if self.init == "midpoint" else 2.0 * bound_for_iters(m)


@dataclass
class SearchResult:
    theta_hat: float
    amplitude_hat: float
    iterations_used: int
    oracle_calls: int
    gate_ops: int
    converged_exact: bool
    bound: float
    # (lo, hi, beta) after each iteration's update
    interval_history: list = field(default_factory=list)

    def error(self, theta: float) -> float:
        return abs(self.theta_hat - theta)


Oracle = Callable[[float], ComparisonOutcome]


def bisect_angle(oracle: Oracle, config: SearchConfig) -> SearchResult:
    """Run the interval-halving loop against ``oracle(beta)``.

    On HIDDEN_GREATER the lower end moves up to beta, on HIDDEN_LESS the
    upper end moves down, and beta moves to the midpoint of the new
    interval. An EQUAL answer stops the loop at the current beta.
    """
    m = config.m
    lo, hi = 0.0, HALF_PI
    beta = config.initial_beta()
    history = []
    calls = 0
    exact = False
    for _ in range(m):
        outcome = oracle(beta)
        calls += 1
        if outcome is ComparisonOutcome.EQUAL_WITHIN_TOL:
            exact = True
            history.append((lo, hi, beta))
            break
        if outcome is ComparisonOutcome.HIDDEN_GREATER:
            lo = beta
            beta = (beta + hi) / 2
        else:
            hi = beta
            beta = (beta + lo) / 2
        history.append((lo, hi, beta))
    return SearchResult(
        theta_hat=beta,
        amplitude_hat=math.sin(beta),
        iterations_used=calls,
        oracle_calls=calls,
        gate_ops=GATE_APPLICATIONS_PER_CALL * calls,
        converged_exact=exact,
        bound=config.guaranteed_bound(),
        interval_history=history,
    )


def _search_coordinates(cos_t: float, sin_t: float, config: SearchConfig) -> SearchResult:
    return bisect_angle(lambda beta: compare_reduced(cos_t, sin_t, beta, config.eq_tol), config)


def search_single(psi: QuantumState, config: SearchConfig) -> SearchResult:
    """Estimate alpha of cos(alpha)|0> + sin(alpha)|1>."""
    return _search_coordinates(*reduced_coordinates(psi), config)


def search_multi(psi: QuantumState, k: int | BasisIndex, config: SearchConfig) -> SearchResult:
    """Estimate theta = arcsin(a_k); ``amplitude_hat`` estimates a_k."""
    return _search_coordinates(*reduced_coordinates(psi, k), config)


def search_all(psi: QuantumState, config: SearchConfig) -> list[SearchResult]:
    """search_multi for every basis index, in index order.

    The residual norms ||psi restricted to i != k|| come from prefix and
    suffix sums, so setup is O(2^n) rather than O(4^n).
    """
    if not psi.is_nonnegative():
        raise DomainError("comparison requires nonnegative amplitudes")
    sq = psi.amplitudes ** 2
    before = np.concatenate(([0.0], np.cumsum(sq)[:-1]))
    after = np.concatenate((np.cumsum(sq[::-1])[::-1][1:], [0.0]))
    rest = np.sqrt(before + after)
    return [_search_coordinates(float(r), float(a), config) for r, a in zip(rest, psi.amplitudes)]
