"""
Pauli-basis Fourier transform.

The fast path treats the matrix as a tensor with one 4-dimensional index per
qubit, pairing row bit r_j with column bit c_j as 2*r_j + c_j, and applies the
same 4x4 change of basis along every axis: n tensor contractions, O(n * 4^n)
work. The per-coefficient trace path is kept as an independent oracle.
"""

import numpy as np

from .operators import DenseOperator, as_operator, qubit_count
from .paulis import PAULI_MATRICES, PauliString, pauli_matrix
from .spectra import Spectrum

# Row s holds conj(sigma^s)[r, c] / 2 at column 2r + c.
_TO_PAULI = PAULI_MATRICES.reshape(4, 4).conj() / 2
# Column s holds sigma^s[r, c] at row 2r + c.
_FROM_PAULI = PAULI_MATRICES.reshape(4, 4).T


def _contract_each_axis(tensor, local):
    for axis in range(tensor.ndim):
        tensor = np.moveaxis(np.tensordot(local, tensor, axes=([1], [axis])), 0, axis)
    return tensor


def pauli_coefficients(matrix: np.ndarray) -> np.ndarray:
    """All 4^n coefficients of ``matrix`` as a (4,) * n complex array."""
    n = qubit_count(matrix.shape[0])
    interleaved = [axis for j in range(n) for axis in (j, n + j)]
    tensor = np.asarray(matrix, dtype=complex).reshape((2,) * (2 * n))
    tensor = tensor.transpose(interleaved).reshape((4,) * n)
    return _contract_each_axis(tensor, _TO_PAULI)


def matrix_from_coefficients(coefficients: np.ndarray) -> np.ndarray:
    """Inverse of ``pauli_coefficients``."""
    n = coefficients.ndim
    tensor = _contract_each_axis(np.asarray(coefficients, dtype=complex), _FROM_PAULI)
    rows_then_columns = list(range(0, 2 * n, 2)) + list(range(1, 2 * n, 2))
    tensor = tensor.reshape((2,) * (2 * n)).transpose(rows_then_columns)
    return tensor.reshape(2**n, 2**n)


def fourier_transform(f) -> Spectrum:
    f = as_operator(f)
    return Spectrum.from_array(pauli_coefficients(f.matrix), hermitian=f.hermitian)


def fourier_transform_direct(f) -> Spectrum:
    """Reference transform: 2^-n tr(sigma^s† f) one string at a time."""
    f = as_operator(f)
    n = f.n
    coeffs = {}
    for index in range(4**n):
        s = PauliString.from_index(index, n)
        coeffs[s] = np.vdot(pauli_matrix(s).matrix, f.matrix) / f.dim
    return Spectrum(n, coeffs, hermitian=f.hermitian)


def inverse_fourier(spec: Spectrum) -> DenseOperator:
    matrix = matrix_from_coefficients(spec.to_array())
    return DenseOperator(matrix, hermitian=True if spec.hermitian else None)


def coefficient_array(f) -> np.ndarray:
    """Dense coefficient array from either an operator or a spectrum."""
    if isinstance(f, Spectrum):
        return f.to_array().astype(complex)
    return pauli_coefficients(as_operator(f).matrix)
