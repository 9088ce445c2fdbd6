"""Truth tables and the two oracle constructions of a classical boolean function."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from pauli_core.formats import parse_bitstring
from pauli_core.operators import DenseOperator
from qbflab.exceptions import InputFormatError

_MINUS = np.array([1.0, -1.0]) / np.sqrt(2)


@dataclass(frozen=True)
class TruthTable:
    """Values f(x) in {0, 1}; index x is the big-endian reading of the input bits."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        length = len(values)
        if length < 2 or length & (length - 1):
            raise InputFormatError(f"Truth table length {length} is not a power of two >= 2")
        if set(values) - {0, 1}:
            raise InputFormatError("Truth table values must be 0 or 1")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_bitstring(cls, text: str) -> TruthTable:
        return cls(tuple(int(bit) for bit in parse_bitstring(text)))

    @classmethod
    def from_function(cls, n: int, func) -> TruthTable:
        """Tabulate ``func(bits)`` over all n-bit tuples, qubit 1 first."""
        return cls(tuple(int(func(bits)) for bits in product((0, 1), repeat=n)))

    @property
    def n(self) -> int:
        return len(self.values).bit_length() - 1

    def signs(self) -> np.ndarray:
        return 1 - 2 * np.array(self.values, dtype=float)

    def bitstring(self) -> str:
        return "".join(str(v) for v in self.values)


def phase_oracle(t: TruthTable) -> DenseOperator:
    """|x> -> (-1)^f(x) |x>."""
    return DenseOperator(np.diag(t.signs()), hermitian=True)


def bit_oracle(t: TruthTable) -> DenseOperator:
    """|x>|y> -> |x>|y XOR f(x)> with the target as the last (least significant) qubit."""
    dim = 2 ** (t.n + 1)
    matrix = np.zeros((dim, dim))
    for x, fx in enumerate(t.values):
        for y in (0, 1):
            matrix[2 * x + (y ^ fx), 2 * x + y] = 1.0
    return DenseOperator(matrix, hermitian=True)


def phase_from_bit_oracle(u: DenseOperator) -> DenseOperator:
    """(I ⊗ <-|) U (I ⊗ |->): one use of the bit oracle acting as the phase oracle."""
    half = u.dim // 2
    blocks = u.matrix.reshape(half, 2, half, 2)
    return DenseOperator(np.einsum("aybz,y,z->ab", blocks, _MINUS, _MINUS))
