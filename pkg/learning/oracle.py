"""
Simulated oracle access to a unitary operator.

Measurement statistics are drawn from the cached Pauli spectrum instead of
evolving the doubled system, which gives the same output distributions.
"""

import threading

import numpy as np

from pauli_core.fourier import pauli_coefficients
from pauli_core.norms import require_unitary
from pauli_core.paulis import PauliString
from qbflab.seeding import as_generator, resolve_seed


class OracleHandle:
    """
    Oracle for ``operator`` that counts every simulated use of f, f†,
    controlled-f or controlled-f†.

    In exact mode every Bernoulli experiment returns its success probability
    instead of a sampled frequency, so estimates carry no sampling noise;
    queries are still charged as if the draws had happened.
    """

    def __init__(self, operator, seed=None, exact=False):
        self.operator = require_unitary(operator)
        self.seed = resolve_seed(seed)
        self.exact = exact
        self.rng = as_generator(self.seed)
        self.coefficients = pauli_coefficients(self.operator.matrix)
        self.query_count = 0
        self._lock = threading.Lock()

    @property
    def n(self) -> int:
        return self.coefficients.ndim

    @property
    def bell_probabilities(self) -> np.ndarray:
        probabilities = np.abs(self.coefficients.ravel()) ** 2
        return probabilities / probabilities.sum()

    def coefficient(self, s: PauliString) -> complex:
        return complex(self.coefficients[s.word])

    def charge(self, queries):
        with self._lock:
            self.query_count += int(queries)

    def draw_strings(self, count) -> np.ndarray:
        """Flat indices of ``count`` Bell-basis measurements, one query each."""
        self.charge(count)
        return self.rng.choice(self.coefficients.size, size=count, p=self.bell_probabilities)

    def success_fraction(self, probability, draws) -> float:
        """Observed fraction of '0' outcomes in ``draws`` runs of a control-qubit circuit."""
        probability = float(np.clip(probability, 0.0, 1.0))
        if self.exact:
            return probability
        return self.rng.binomial(draws, probability) / draws
