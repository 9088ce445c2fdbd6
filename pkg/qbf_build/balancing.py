"""
Spin flip and the balancing operation.

The single-qubit spin flip S(M) = sigma^2 M* sigma^2 sends every non-identity
Pauli to its negative and fixes the identity. On qubit j of a larger operator
it is realized linearly as sigma^2_j M^{T_j} sigma^2_j (partial transpose on
qubit j), which equals sigma^2 M* sigma^2 whenever M is Hermitian.
"""

from functools import reduce

import numpy as np

from pauli_core.norms import require_quantum_boolean
from pauli_core.operators import DenseOperator, as_operator
from pauli_core.paulis import PAULI_MATRICES
from pauli_core.subsystems import embed_local, validate_qubits

_Y = PAULI_MATRICES[2]


def spin_flip(M, j: int) -> DenseOperator:
    M = as_operator(M)
    n = M.n
    (j,) = validate_qubits([j], n)
    tensor = M.matrix.reshape((2,) * (2 * n))
    transposed = np.swapaxes(tensor, j - 1, n + j - 1).reshape(M.dim, M.dim)
    y = embed_local(_Y, j, n)
    return DenseOperator(y @ transposed @ y, hermitian=M.hermitian or None)


def spin_flip_all(f) -> DenseOperator:
    """S^{⊗n}(f) = (sigma^2)^{⊗n} f^T (sigma^2)^{⊗n}; multiplies chi_s by (-1)^|s|."""
    f = as_operator(f)
    ys = reduce(np.kron, [_Y] * f.n)
    return DenseOperator(ys @ f.matrix.T @ ys, hermitian=f.hermitian or None)


def balance(f) -> DenseOperator:
    """
    B(f) = |0><0| ⊗ f - |1><1| ⊗ S^{⊗n}(f) on n + 1 qubits.

    The ancilla becomes qubit 1. The result is traceless and keeps the
    level-0 plus level-1 weight of f (the identity coefficient moves to
    sigma^3 on the ancilla).
    """
    f = require_quantum_boolean(f)
    top = np.diag([1.0, 0.0])
    bottom = np.diag([0.0, 1.0])
    matrix = np.kron(top, f.matrix) - np.kron(bottom, spin_flip_all(f).matrix)
    return DenseOperator(matrix, hermitian=True)
