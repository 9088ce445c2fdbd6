"""
The noise superoperator T_eps and its depolarizing-channel form.

T_eps multiplies every coefficient by eps^|s|. For -1/3 <= eps <= 1 it is the
n-fold qubit depolarizing channel D_eps(f) = (1 - eps)/2 tr(f) I + eps f,
which is completely positive only in that range.
"""

import numpy as np

from pauli_core.fourier import matrix_from_coefficients, pauli_coefficients
from pauli_core.operators import DenseOperator, as_operator
from pauli_core.spectra import Spectrum, weight_grid
from pauli_core.subsystems import replace_with_identity
from qbflab.exceptions import ParameterRangeError

COMPLETELY_POSITIVE_MIN = -1.0 / 3.0


def check_noise_rate(epsilon, channel=False) -> float:
    epsilon = float(epsilon)
    low = COMPLETELY_POSITIVE_MIN if channel else -1.0
    if not low <= epsilon <= 1.0:
        raise ParameterRangeError(f"Noise rate must lie in [{low:.6g}, 1], got {epsilon}")
    return epsilon


def is_completely_positive(epsilon) -> bool:
    return COMPLETELY_POSITIVE_MIN <= float(epsilon) <= 1.0


def noise_multipliers(n, epsilon) -> np.ndarray:
    """eps^|s| on the (4,)*n grid; 0^0 = 1 keeps the identity coefficient."""
    return float(epsilon) ** weight_grid(n)


def apply_noise(spec: Spectrum, epsilon) -> Spectrum:
    epsilon = check_noise_rate(epsilon)
    return Spectrum(
        spec.n,
        {s: value * epsilon**s.weight for s, value in spec.items()},
        hermitian=spec.hermitian,
    )


def noisy_operator(f, epsilon) -> DenseOperator:
    """T_eps f computed through the coefficient tensor."""
    epsilon = check_noise_rate(epsilon)
    f = as_operator(f)
    coefficients = pauli_coefficients(f.matrix) * noise_multipliers(f.n, epsilon)
    return DenseOperator(matrix_from_coefficients(coefficients), hermitian=f.hermitian or None)


def depolarize(f, epsilon) -> DenseOperator:
    """D_eps applied qubit by qubit; refuses rates outside the completely positive range."""
    epsilon = check_noise_rate(epsilon, channel=True)
    f = as_operator(f)
    matrix = f.matrix
    for qubit in range(1, f.n + 1):
        matrix = (1 - epsilon) * replace_with_identity(matrix, [qubit]) + epsilon * matrix
    return DenseOperator(matrix, hermitian=f.hermitian or None)
