from __future__ import annotations

import math
from dataclasses import dataclass

from pauli_core.paulis import PauliString
from qbflab.reports import INCONCLUSIVE


@dataclass
class TestReport:
    """
    Outcome of one property test.

    ``sampled_acceptance`` is ``(accepted, trials)`` when the measurement
    procedure was simulated. ``witness`` and ``phase`` locate the stabilizer
    the function is close to, up to the phase ``exp(i * phase)``.
    """

    test: str
    exact_probability: float
    verdict: str = INCONCLUSIVE
    sampled_acceptance: tuple[int, int] | None = None
    witness: PauliString | None = None
    phase: float | None = None
    epsilon_bound: float | None = None
    delta: float | None = None
    seed: int | None = None

    @property
    def sampled_fraction(self) -> float | None:
        if self.sampled_acceptance is None:
            return None
        accepted, trials = self.sampled_acceptance
        return accepted / trials

    @property
    def confidence_radius(self) -> float | None:
        """4 * sqrt(p(1 - p) / trials) around the exact probability."""
        if self.sampled_acceptance is None:
            return None
        p = self.exact_probability
        return 4 * math.sqrt(p * (1 - p) / self.sampled_acceptance[1])

    def sample_is_consistent(self) -> bool | None:
        if self.sampled_acceptance is None:
            return None
        return abs(self.sampled_fraction - self.exact_probability) <= self.confidence_radius
