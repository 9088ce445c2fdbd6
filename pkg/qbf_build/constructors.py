"""Constructors producing quantum boolean functions from other operators."""

from functools import reduce

import numpy as np
from scipy import linalg

from pauli_core.norms import (
    operator_norm,
    require_hermitian,
    require_quantum_boolean,
    require_unitary,
)
from pauli_core.operators import DenseOperator, as_operator, require_same_size
from qbflab.conf import get_setting, resolve_tolerance
from qbflab.exceptions import (
    AnticommutationError,
    NormalizationError,
    NotProjectorError,
    NotQuantumBooleanError,
    ParameterRangeError,
)


def projector_qbf(P, tol=None) -> DenseOperator:
    """I - 2P for a Hermitian projector P."""
    tol = resolve_tolerance(tol)
    P = require_hermitian(P, tol)
    defect = operator_norm(P.matrix @ P.matrix - P.matrix)
    if defect > tol:
        raise NotProjectorError(f"Input is not a projector: ||P^2 - P||_inf = {defect:.3e}")
    return DenseOperator(np.eye(P.dim) - 2 * P.matrix, hermitian=True)


def anticommuting_combination(alphas, fs, tol=None) -> DenseOperator:
    """
    sum_j alpha_j f_j for real unit-norm alphas and pairwise anticommuting
    quantum boolean f_j. Anticommutation is checked pairwise on dense matrices.
    """
    tol = resolve_tolerance(tol)
    alphas = [float(a) for a in alphas]
    fs = [as_operator(f) for f in fs]
    if not fs or len(alphas) != len(fs):
        raise ParameterRangeError(
            f"Need one coefficient per operator, got {len(alphas)} and {len(fs)}"
        )

    norm = sum(a * a for a in alphas)
    if abs(norm - 1.0) > tol:
        raise NormalizationError(f"Coefficients must satisfy sum alpha^2 = 1, got {norm:.12g}")

    for index, f in enumerate(fs, start=1):
        require_same_size(fs[0], f)
        try:
            require_quantum_boolean(f, tol)
        except NotQuantumBooleanError as exc:
            raise NotQuantumBooleanError(f"Operator {index}: {exc}") from None

    for j in range(len(fs)):
        for k in range(j + 1, len(fs)):
            a, b = fs[j].matrix, fs[k].matrix
            defect = operator_norm(a @ b + b @ a)
            if defect > tol:
                raise AnticommutationError(
                    f"Operators {j + 1} and {k + 1} do not anticommute: "
                    f"||{{f_j, f_k}}||_inf = {defect:.3e}",
                    pair=(j + 1, k + 1),
                )

    combined = sum(a * f.matrix for a, f in zip(alphas, fs))
    return require_quantum_boolean(DenseOperator(combined), tol)


def sign_function(h) -> DenseOperator:
    """
    sgn(h) through the eigendecomposition, with sgn(x) = 1 for x > 0 and -1
    for x <= 0. Eigenvalues within the zero band count as zero.
    """
    h = require_hermitian(h)
    band = float(get_setting("QBF_ZERO_EIGENVALUE_BAND", 1e-12))
    eigenvalues, vectors = linalg.eigh(h.matrix)
    signs = np.where(eigenvalues > band, 1.0, -1.0)
    matrix = (vectors * signs) @ vectors.conj().T
    return DenseOperator((matrix + matrix.conj().T) / 2, hermitian=True)


def conjugate(f, u) -> DenseOperator:
    """U† f U; quantum booleanity is preserved for unitary U."""
    f, u = as_operator(f), require_unitary(u)
    require_same_size(f, u)
    return DenseOperator(u.matrix.conj().T @ f.matrix @ u.matrix)


def local_qbf(factors) -> DenseOperator:
    """Tensor product of single-qubit quantum boolean factors, qubit 1 first."""
    factors = [require_quantum_boolean(factor) for factor in factors]
    for factor in factors:
        if factor.n != 1:
            raise ParameterRangeError(f"Local factors act on one qubit, got {factor.n}")
    return DenseOperator(reduce(np.kron, (factor.matrix for factor in factors)))
