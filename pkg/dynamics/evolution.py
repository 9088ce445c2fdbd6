"""Heisenberg evolution sigma_j^s(t) = e^{-itH} sigma_j^s e^{itH} on dense chains."""

import numpy as np
from scipy import linalg

from pauli_core.operators import DenseOperator
from pauli_core.paulis import PauliString, pauli_matrix
from qbf_build.constructors import conjugate
from qbflab.exceptions import InputFormatError

from .chains import require_dense_capacity, validate_window


def site_observable(n, qubit, symbol) -> DenseOperator:
    """sigma^symbol on ``qubit``; symbol 1, 2, 3 for X, Y, Z."""
    if symbol not in (1, 2, 3):
        raise InputFormatError(f"Pauli symbol must be 1, 2 or 3, got {symbol}")
    return pauli_matrix(PauliString.single(n, qubit, symbol))


def propagator(matrix, t) -> DenseOperator:
    """e^{itH} from a single eigendecomposition of the Hermitian ``matrix``."""
    eigenvalues, vectors = linalg.eigh(matrix)
    return DenseOperator((vectors * np.exp(1j * t * eigenvalues)) @ vectors.conj().T)


def heisenberg(matrix, observable, t) -> DenseOperator:
    evolved = conjugate(observable, propagator(matrix, t))
    return DenseOperator((evolved.matrix + evolved.matrix.conj().T) / 2, hermitian=True)


def evolve_observable(H, qubit, symbol, t) -> DenseOperator:
    require_dense_capacity(H.n)
    observable = site_observable(H.n, qubit, symbol)
    if t == 0:
        return observable
    return heisenberg(H.dense(), observable, float(t))


def truncated_evolution(H, qubit, symbol, t, bonds) -> DenseOperator:
    """Evolution under H_Lambda for a contiguous bond window touching ``qubit``."""
    require_dense_capacity(H.n)
    observable = site_observable(H.n, qubit, symbol)
    bonds = validate_window(bonds, H.n, qubit)
    if t == 0:
        return observable
    return heisenberg(H.dense(bonds), observable, float(t))
