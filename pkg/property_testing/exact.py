"""
Exact acceptance probabilities computed from the Pauli spectrum.

The state (f ⊗ I)|Phi> has amplitude f̂_s on the Bell-basis vector labelled s,
so every quantity here is a function of the coefficient tensor.
"""

import numpy as np

from pauli_core.fourier import pauli_coefficients
from pauli_core.norms import inner_product, require_unitary, two_norm_squared
from pauli_core.operators import as_operator, require_same_size
from pauli_core.spectra import weight_grid
from pauli_core.subsystems import reduced_purities
from qbflab.conf import get_setting
from qbflab.exceptions import CapacityError, ParameterRangeError


def _probability(value):
    return float(np.clip(value, 0.0, 1.0))


def check_probability_parameter(value, name):
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ParameterRangeError(f"{name} must lie in [0, 1], got {value}")
    return value


def unitary_coefficients(f) -> np.ndarray:
    return pauli_coefficients(require_unitary(f).matrix)


def stabilizer_test_probability(f) -> float:
    """sum_s |f̂_s|^4."""
    c = unitary_coefficients(f)
    return _probability(np.sum(np.abs(c) ** 4))


def hastad_test_probability(f, delta) -> float:
    """sum_s (1 - delta)^|s| |f̂_s|^4."""
    delta = check_probability_parameter(delta, "delta")
    c = unitary_coefficients(f)
    damping = (1.0 - delta) ** weight_grid(c.ndim)
    return _probability(np.sum(damping * np.abs(c) ** 4))


def _subset_average(coefficients) -> float:
    n = coefficients.ndim
    ceiling = int(get_setting("QBF_LOCALITY_MAX_QUBITS", 6))
    if n > ceiling:
        raise CapacityError(
            f"Locality test builds a 4^{n}-dimensional state; the ceiling is n = {ceiling}"
        )
    purities = reduced_purities(coefficients.ravel(), n)
    return sum(purities.values()) / 2**n


def locality_test_probability(f) -> float:
    """2^-n sum over subsets S of tr(rho_S^2) for the state (f ⊗ I)|Phi>."""
    return _probability(_subset_average(unitary_coefficients(f)))


def dictator_test_probability(f, delta) -> float:
    """
    Locality test run on the unnormalized state of T_rho f, rho = (1 - delta)^(1/4).

    Equals 1 - delta on stabilizer dictators. No soundness is claimed.
    """
    delta = check_probability_parameter(delta, "delta")
    c = unitary_coefficients(f)
    rho = (1.0 - delta) ** 0.25
    return _probability(_subset_average(c * rho ** weight_grid(c.ndim)))


def discrimination_probability(f1, f2, prior=0.5) -> float:
    """
    Optimal success probability for telling f1 from f2 with one use.

    1/2 + 1/2 sqrt(1 - 4 p (1 - p) |<f1, f2>|^2) for prior p on f1.
    """
    prior = check_probability_parameter(prior, "prior")
    f1, f2 = as_operator(f1), as_operator(f2)
    require_same_size(f1, f2)
    require_unitary(f1)
    require_unitary(f2)
    overlap = abs(inner_product(f1, f2)) ** 2
    return 0.5 + 0.5 * float(np.sqrt(max(0.0, 1.0 - 4 * prior * (1 - prior) * overlap)))


def closeness(f, g, up_to_phase=False) -> float:
    """
    The epsilon with f and g epsilon-close: 1/4 ||f - g||_2^2.

    ``up_to_phase`` minimizes over global phases of g.
    """
    f, g = as_operator(f), as_operator(g)
    require_same_size(f, g)
    if up_to_phase:
        overlap = abs(inner_product(f, g))
        return max(0.0, (two_norm_squared(f) + two_norm_squared(g) - 2 * overlap) / 4)
    return two_norm_squared(f - g) / 4


def is_close(f, g, epsilon, up_to_phase=False) -> bool:
    return closeness(f, g, up_to_phase) <= float(epsilon)
