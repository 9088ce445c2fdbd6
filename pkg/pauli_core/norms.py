"""Normalized Schatten norms, inner products and operator predicates."""

import math

import numpy as np
from scipy import linalg

from qbflab.conf import resolve_tolerance
from qbflab.exceptions import (
    NotHermitianError,
    NotQuantumBooleanError,
    NotUnitaryError,
    ParameterRangeError,
)

from .operators import DenseOperator, as_operator, require_same_size


def parse_exponent(p) -> float:
    """Accept a number or the strings 'inf' / 'infinity' for p = infinity."""
    if isinstance(p, str):
        p = float("inf") if p.strip().lower() in ("inf", "infinity", "∞") else float(p)
    p = float(p)
    if math.isnan(p) or p < 1:
        raise ParameterRangeError(f"Schatten exponent must satisfy p >= 1, got {p}")
    return p


def singular_values(f) -> np.ndarray:
    """
    Singular values from the eigenvalues of f†f (symmetrized).

    Hermitian operators use |eigenvalues of f| directly, which are the same
    numbers with better accuracy near zero.
    """
    f = as_operator(f)
    if f.hermitian:
        return np.abs(linalg.eigvalsh(f.matrix))
    gram = f.matrix.conj().T @ f.matrix
    gram = (gram + gram.conj().T) / 2
    return np.sqrt(np.clip(linalg.eigvalsh(gram), 0.0, None))


def schatten_norm(f, p) -> float:
    p = parse_exponent(p)
    values = singular_values(f)
    top = float(values.max())
    if math.isinf(p) or top == 0.0:
        return top
    # Scale by the largest value so large p cannot overflow
    return top * float(np.mean((values / top) ** p)) ** (1.0 / p)


def operator_norm(matrix) -> float:
    """Largest singular value of a raw matrix."""
    return float(np.linalg.norm(np.asarray(matrix), 2))


def inner_product(f, g) -> complex:
    """Normalized Hilbert-Schmidt product 2^-n tr(f† g)."""
    f, g = as_operator(f), as_operator(g)
    require_same_size(f, g)
    return complex(np.vdot(f.matrix, g.matrix) / f.dim)


def two_norm_squared(f) -> float:
    f = as_operator(f)
    return float(np.vdot(f.matrix, f.matrix).real / f.dim)


def hermiticity_defect(f) -> float:
    matrix = as_operator(f).matrix
    return operator_norm(matrix - matrix.conj().T)


def unitarity_defect(f) -> float:
    f = as_operator(f)
    return operator_norm(f.matrix.conj().T @ f.matrix - np.eye(f.dim))


def is_hermitian(f, tol=None) -> bool:
    return hermiticity_defect(f) <= resolve_tolerance(tol)


def is_unitary(f, tol=None) -> bool:
    return unitarity_defect(f) <= resolve_tolerance(tol)


def is_quantum_boolean(f, tol=None) -> bool:
    """Unitary and Hermitian: ||f^2 - I||_inf <= tol and ||f - f†||_inf <= tol."""
    f = as_operator(f)
    tol = resolve_tolerance(tol)
    square_defect = operator_norm(f.matrix @ f.matrix - np.eye(f.dim))
    return square_defect <= tol and hermiticity_defect(f) <= tol


def require_hermitian(f, tol=None) -> DenseOperator:
    f = as_operator(f)
    defect = hermiticity_defect(f)
    if defect > resolve_tolerance(tol):
        raise NotHermitianError(f"Operator is not Hermitian: ||f - f†||_inf = {defect:.3e}")
    return f


def require_unitary(f, tol=None) -> DenseOperator:
    f = as_operator(f)
    defect = unitarity_defect(f)
    if defect > resolve_tolerance(tol):
        raise NotUnitaryError(f"Operator is not unitary: ||f†f - I||_inf = {defect:.3e}")
    return f


def require_quantum_boolean(f, tol=None) -> DenseOperator:
    f = as_operator(f)
    if not is_quantum_boolean(f, tol):
        square_defect = operator_norm(f.matrix @ f.matrix - np.eye(f.dim))
        raise NotQuantumBooleanError(
            "Operator is not quantum boolean: "
            f"||f^2 - I||_inf = {square_defect:.3e}, ||f - f†||_inf = {hermiticity_defect(f):.3e}"
        )
    return f
