"""
Derivative operators d_j and d_J.

Both kinds of input are supported: a Spectrum keeps the strings whose support
meets J, a DenseOperator uses f - tr_J(f) ⊗ I_J / 2^|J|. The two paths agree.
d over the empty set is the zero operator.
"""

import numpy as np

from pauli_core.fourier import pauli_coefficients
from pauli_core.operators import DenseOperator, as_operator
from pauli_core.spectra import Spectrum
from pauli_core.subsystems import replace_with_identity, validate_qubits


def coefficient_tensor(f) -> np.ndarray:
    if isinstance(f, Spectrum):
        return f.to_array()
    return pauli_coefficients(as_operator(f).matrix)


def qubit_count_of(f) -> int:
    return f.n if isinstance(f, Spectrum) else as_operator(f).n


def support_mask(n, qubits) -> np.ndarray:
    """Boolean (4,) * n mask of strings acting non-trivially on some qubit in ``qubits``."""
    mask = np.zeros((4,) * n, dtype=bool)
    for qubit in qubits:
        index = [slice(None)] * n
        index[qubit - 1] = slice(1, None)
        mask[tuple(index)] = True
    return mask


def derivative_set(f, qubits):
    n = qubit_count_of(f)
    qubits = validate_qubits(qubits, n)
    if isinstance(f, Spectrum):
        return f.filter(lambda s: any(s.word[q - 1] != 0 for q in qubits))
    f = as_operator(f)
    if not qubits:
        return DenseOperator.zeros(n)
    return DenseOperator(f.matrix - replace_with_identity(f.matrix, qubits), hermitian=f.hermitian or None)


def derivative(f, j):
    return derivative_set(f, [j])


def laplacian(f):
    """Sum of d_j(f) over every qubit; <f, laplacian(f)> equals the total influence."""
    n = qubit_count_of(f)
    if isinstance(f, Spectrum):
        return Spectrum(
            n, {s: value * s.weight for s, value in f.items()}, hermitian=f.hermitian
        )
    f = as_operator(f)
    matrix = sum(f.matrix - replace_with_identity(f.matrix, [j]) for j in range(1, n + 1))
    return DenseOperator(matrix, hermitian=f.hermitian or None)
