"""
Learning evolved observables sigma_j^s(t) from oracle access.

Goldreich-Levin lists the coefficients of sigma_j^s(t) above gamma; each listed
coefficient is then re-estimated to eps' = sqrt(eps / (2L)) for a list of size
L, so the L estimation errors add up to at most eps / 2 in squared 2-norm. The
confidence budget is split in half between the list and the L estimates.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field

import numpy as np

from learning.estimation import (
    COEFFICIENT_QUERIES_PER_DRAW,
    WEIGHT_QUERIES_PER_DRAW,
    check_open_unit,
    estimate_coefficient,
    hoeffding_draws,
)
from learning.goldreich_levin import goldreich_levin
from learning.oracle import OracleHandle
from pauli_core.fourier import matrix_from_coefficients
from pauli_core.norms import two_norm_squared
from pauli_core.operators import DenseOperator
from pauli_core.paulis import PauliString
from qbflab.conf import get_setting
from qbflab.exceptions import CapacityError
from qbflab.reports import CheckReport
from qbflab.seeding import run_parallel, seeded_streams

from .evolution import evolve_observable

logger = logging.getLogger(__name__)


@dataclass
class DynamicsLearningResult:
    estimate: DenseOperator
    error: float
    missed_weight: float
    queries: int
    query_bound: float
    epsilon_prime: float | None
    coefficients: list[tuple[PauliString, float]] = field(default_factory=list)
    seed: int | None = None
    exact: bool = False

    @property
    def distance(self) -> float:
        """1/4 ||estimate - sigma(t)||_2^2."""
        return self.error / 4

    def to_primitive(self):
        return {
            "coefficients": [(s.label, value) for s, value in self.coefficients],
            "error": self.error,
            "distance": self.distance,
            "missed_weight": self.missed_weight,
            "queries": self.queries,
            "query_bound": self.query_bound,
            "epsilon_prime": self.epsilon_prime,
            "seed": self.seed,
            "exact": self.exact,
        }


def require_learning_capacity(n):
    ceiling = int(get_setting("QBF_DYNAMICS_LEARN_MAX_QUBITS", 8))
    if n > ceiling:
        raise CapacityError(f"Learning dynamics on {n} qubits is above the ceiling n = {ceiling}")


def query_bound(n, gamma, delta, list_size, epsilon_prime, estimate_delta) -> float:
    """Queries if Goldreich-Levin makes 16n/gamma^2 weight estimations and the list has L entries."""
    step_delta = delta * gamma**2 / (16 * n)
    bound = 16 * n / gamma**2 * WEIGHT_QUERIES_PER_DRAW * hoeffding_draws(gamma**2 / 4, step_delta)
    bound += list_size * COEFFICIENT_QUERIES_PER_DRAW * hoeffding_draws(gamma / 4, step_delta)
    if list_size:
        bound += list_size * COEFFICIENT_QUERIES_PER_DRAW * hoeffding_draws(epsilon_prime, estimate_delta)
    return bound


def learn_dynamics(H, qubit, symbol, t, gamma, epsilon, delta, seed=None, exact=False, target=None):
    """
    Reconstruct sigma_qubit^symbol(t) from queries. ``target`` skips the exact
    evolution when the caller already has it. The reported error is measured
    against the exact evolution and includes the weight that was never listed.
    """
    require_learning_capacity(H.n)
    gamma = check_open_unit(gamma, "gamma")
    epsilon = check_open_unit(epsilon, "epsilon")
    delta = check_open_unit(delta, "delta")
    if target is None:
        target = evolve_observable(H, qubit, symbol, t)

    started = time.perf_counter()
    oracle = OracleHandle(target, seed=seed, exact=exact)
    listed = goldreich_levin(oracle, gamma, delta / 2)

    strings = sorted(listed.strings)
    size = len(strings)
    epsilon_prime = math.sqrt(epsilon / (2 * size)) if size else None
    estimate_delta = delta / (2 * size) if size else None
    coefficients = np.zeros((4,) * H.n)
    learned = []
    for s in strings:
        value = estimate_coefficient(oracle, s, epsilon_prime, estimate_delta)
        coefficients[s.word] = value
        learned.append((s, value))

    estimate = DenseOperator(matrix_from_coefficients(coefficients), hermitian=True)
    listed_mask = np.zeros(coefficients.shape, dtype=bool)
    for s in strings:
        listed_mask[s.word] = True
    missed = float((np.abs(oracle.coefficients[~listed_mask]) ** 2).sum())

    result = DynamicsLearningResult(
        estimate=estimate,
        error=two_norm_squared(estimate - target),
        missed_weight=missed,
        queries=oracle.query_count,
        query_bound=query_bound(H.n, gamma, delta / 2, size, epsilon_prime, estimate_delta),
        epsilon_prime=epsilon_prime,
        coefficients=learned,
        seed=oracle.seed,
        exact=exact,
    )
    logger.info(
        "Learned evolved observable",
        extra={
            "n": H.n,
            "qubit": qubit,
            "time": t,
            "listed": size,
            "error": result.error,
            "queries": result.queries,
            "seed": oracle.seed,
            "elapsed_seconds": time.perf_counter() - started,
        },
    )
    return result


def learning_contract_sweep(H, qubit, symbol, t, gamma, epsilon, delta, runs=100, rng=None) -> CheckReport:
    """
    Empirical failure rate of ||estimate - sigma(t)||_2^2 <= eps over seeded
    runs, compared with delta plus three binomial standard deviations.
    """
    target = evolve_observable(H, qubit, symbol, t)
    seed, streams = seeded_streams(rng, runs)

    def run_one(stream):
        run_seed = int(stream.integers(2**62))
        return learn_dynamics(H, qubit, symbol, t, gamma, epsilon, delta, seed=run_seed, target=target)

    results = run_parallel(run_one, streams)
    errors = [result.error for result in results]
    failures = sum(error > epsilon for error in errors)
    rate = failures / runs
    slack = 3 * math.sqrt(delta * (1 - delta) / runs)
    return CheckReport(
        "dynamics-learning-contract",
        rate <= delta + slack,
        delta + slack - rate,
        values={
            "runs": runs,
            "failures": failures,
            "failure_rate": rate,
            "max_error": max(errors),
            "max_missed_weight": max(result.missed_weight for result in results),
            "max_queries": max(result.queries for result in results),
        },
        seed=seed,
    )
