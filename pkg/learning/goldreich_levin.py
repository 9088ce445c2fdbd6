"""
Quantum Goldreich-Levin: find every Pauli coefficient with |f̂_s| >= gamma.

Qubits are processed in order 1..n. Each surviving prefix is extended by the
four symbols, each extension's weight is estimated to gamma^2/4 with
confidence 1 - delta', delta' = delta gamma^2 / (16 n), and extensions whose
estimate reaches gamma^2 / 2 survive.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

from pauli_core.paulis import PauliString

from .estimation import check_open_unit, estimate_coefficient, estimate_weight
from .indicators import IndicatorString

logger = logging.getLogger(__name__)


@dataclass
class GoldreichLevinResult:
    candidates: list[tuple[PauliString, float]] = field(default_factory=list)
    weight_estimations: int = 0
    coefficient_estimations: int = 0
    queries: int = 0
    max_list_size: int = 0
    list_bound: float = 0.0
    estimation_bound: float = 0.0
    seed: int | None = None
    exact: bool = False

    @property
    def strings(self) -> set[PauliString]:
        return {s for s, _ in self.candidates}

    @property
    def list_bound_respected(self) -> bool:
        return self.max_list_size <= self.list_bound


def goldreich_levin(oracle, gamma, delta, eta=None) -> GoldreichLevinResult:
    """
    Returns the surviving strings with coefficient estimates to within
    ``eta`` (default gamma / 4).
    """
    gamma = check_open_unit(gamma, "gamma")
    delta = check_open_unit(delta, "delta")
    n = oracle.n
    eta = gamma / 4 if eta is None else eta
    step_delta = delta * gamma**2 / (16 * n)
    threshold = gamma**2 / 2

    started = time.perf_counter()
    queries_before = oracle.query_count
    result = GoldreichLevinResult(
        list_bound=4 / gamma**2,
        estimation_bound=16 * n / gamma**2,
        seed=oracle.seed,
        exact=oracle.exact,
    )

    survivors = [IndicatorString(n)]
    for k in range(1, n + 1):
        extended = []
        for S in survivors:
            for symbol in range(4):
                child = S.extend(symbol)
                estimate = estimate_weight(oracle, child, gamma, step_delta)
                result.weight_estimations += 1
                if estimate.value >= threshold:
                    extended.append(child)
        survivors = extended
        result.max_list_size = max(result.max_list_size, len(survivors))
        if len(survivors) > result.list_bound:
            if oracle.exact:
                raise AssertionError(
                    f"Exact weights left {len(survivors)} prefixes after qubit {k}, above 4/gamma^2 = {result.list_bound:.6g}"
                )
            logger.warning(
                "Goldreich-Levin list exceeded 4/gamma^2",
                extra={"qubit": k, "list_size": len(survivors), "bound": result.list_bound},
            )

    for S in survivors:
        s = S.as_pauli()
        result.candidates.append((s, estimate_coefficient(oracle, s, eta, step_delta)))
        result.coefficient_estimations += 1
    result.queries = oracle.query_count - queries_before

    logger.info(
        "Goldreich-Levin finished",
        extra={
            "n": n,
            "gamma": gamma,
            "delta": delta,
            "seed": oracle.seed,
            "candidates": len(result.candidates),
            "weight_estimations": result.weight_estimations,
            "queries": result.queries,
            "elapsed_seconds": time.perf_counter() - started,
        },
    )
    return result
