"""
Pauli strings (stabilizer operators).

Symbols 0, 1, 2, 3 stand for I, X, Y, Z. Qubit 1 is the most significant
tensor factor everywhere in the project, so the word ``(s_1, ..., s_n)`` is
also the base-4 digit expansion of the flat index, most significant first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from qbflab.exceptions import InputFormatError, QubitIndexError

from .operators import DenseOperator

PAULI_LABELS = "IXYZ"

PAULI_MATRICES = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
PAULI_MATRICES.setflags(write=False)


@dataclass(frozen=True, order=True)
class PauliString:
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(symbol) for symbol in self.word)
        if not word:
            raise InputFormatError("A Pauli string needs at least one qubit")
        if any(symbol not in (0, 1, 2, 3) for symbol in word):
            raise InputFormatError(f"Pauli symbols must be in 0..3, got {word}")
        object.__setattr__(self, "word", word)

    @classmethod
    def from_label(cls, label: str) -> PauliString:
        label = label.strip().upper()
        try:
            return cls(tuple(PAULI_LABELS.index(char) for char in label))
        except ValueError:
            raise InputFormatError(f"Invalid Pauli label {label!r}") from None

    @classmethod
    def identity(cls, n: int) -> PauliString:
        return cls((0,) * n)

    @classmethod
    def single(cls, n: int, qubit: int, symbol: int) -> PauliString:
        """``symbol`` on ``qubit`` (1-based), identity elsewhere."""
        if not 1 <= qubit <= n:
            raise QubitIndexError(f"Qubit {qubit} out of range 1..{n}")
        word = [0] * n
        word[qubit - 1] = symbol
        return cls(tuple(word))

    @classmethod
    def from_index(cls, index: int, n: int) -> PauliString:
        return cls(tuple(int(d) for d in np.unravel_index(index, (4,) * n)))

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(j + 1 for j, symbol in enumerate(self.word) if symbol)

    @property
    def weight(self) -> int:
        return sum(1 for symbol in self.word if symbol)

    @property
    def label(self) -> str:
        return "".join(PAULI_LABELS[symbol] for symbol in self.word)

    @property
    def index(self) -> int:
        return int(np.ravel_multi_index(self.word, (4,) * self.n))

    def anticommutes_with(self, other: PauliString) -> bool:
        """Odd number of positions where both act non-trivially with different symbols."""
        clashes = sum(
            1 for a, b in zip(self.word, other.word) if a and b and a != b
        )
        return clashes % 2 == 1

    def __str__(self):
        return self.label

    def to_primitive(self):
        return self.label


def pauli_matrix(s: PauliString) -> DenseOperator:
    """Dense matrix of sigma^s as a DenseOperator."""
    matrix = reduce(np.kron, (PAULI_MATRICES[symbol] for symbol in s.word))
    return DenseOperator(matrix, hermitian=True)
