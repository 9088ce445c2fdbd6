"""
Dense operators on n qubits.

Storage is always a dense ``2^n x 2^n`` complex matrix. The documented design
ceiling is n = 10 (a 1024 x 1024 matrix); nothing here uses sparse storage.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Number

import numpy as np

from qbflab.conf import resolve_tolerance
from qbflab.exceptions import (
    DimensionMismatchError,
    MalformedOperatorError,
    NotHermitianError,
)


def qubit_count(dim: int) -> int:
    n = int(dim).bit_length() - 1
    if dim < 2 or (1 << n) != dim:
        raise MalformedOperatorError(f"Dimension {dim} is not a power of two >= 2")
    return n


@dataclass(frozen=True, eq=False)
class DenseOperator:
    __array_ufunc__ = None

    matrix: np.ndarray
    hermitian: bool | None = None

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise MalformedOperatorError(f"Operator must be square, got shape {matrix.shape}")
        qubit_count(matrix.shape[0])

        deviation = float(np.max(np.abs(matrix - matrix.conj().T)))
        hermitian = self.hermitian
        if hermitian is None:
            hermitian = deviation <= resolve_tolerance()
        elif hermitian and deviation > resolve_tolerance():
            raise NotHermitianError(
                f"Operator flagged Hermitian but max |M - M^dagger| = {deviation:.3e}"
            )

        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "hermitian", bool(hermitian))

    @classmethod
    def identity(cls, n: int) -> DenseOperator:
        return cls(np.eye(2**n), hermitian=True)

    @classmethod
    def zeros(cls, n: int) -> DenseOperator:
        return cls(np.zeros((2**n, 2**n)), hermitian=True)

    @classmethod
    def from_diagonal(cls, values) -> DenseOperator:
        return cls(np.diag(np.asarray(values, dtype=complex)))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def n(self) -> int:
        return qubit_count(self.dim)

    def adjoint(self) -> DenseOperator:
        return DenseOperator(self.matrix.conj().T, hermitian=self.hermitian or None)

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def kron(self, other: DenseOperator) -> DenseOperator:
        return DenseOperator(np.kron(self.matrix, as_operator(other).matrix))

    def allclose(self, other, atol=1e-10) -> bool:
        other = as_operator(other)
        return self.dim == other.dim and np.allclose(self.matrix, other.matrix, atol=atol, rtol=0)

    def __matmul__(self, other):
        other = as_operator(other)
        require_same_size(self, other)
        return DenseOperator(self.matrix @ other.matrix)

    def __add__(self, other):
        other = as_operator(other)
        require_same_size(self, other)
        return DenseOperator(self.matrix + other.matrix)

    def __sub__(self, other):
        other = as_operator(other)
        require_same_size(self, other)
        return DenseOperator(self.matrix - other.matrix)

    def __neg__(self):
        return DenseOperator(-self.matrix, hermitian=self.hermitian or None)

    def __mul__(self, scalar):
        if not isinstance(scalar, Number):
            return NotImplemented
        return DenseOperator(self.matrix * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, Number):
            return NotImplemented
        return DenseOperator(self.matrix / scalar)

    def __repr__(self):
        return f"DenseOperator(n={self.n}, hermitian={self.hermitian})"


def as_operator(value) -> DenseOperator:
    if isinstance(value, DenseOperator):
        return value
    return DenseOperator(value)


def require_same_size(f: DenseOperator, g: DenseOperator):
    if f.dim != g.dim:
        raise DimensionMismatchError(
            f"Operators act on different qubit counts ({f.n} and {g.n})"
        )
