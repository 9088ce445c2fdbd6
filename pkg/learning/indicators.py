from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from pauli_core.paulis import PAULI_LABELS, PauliString
from qbflab.exceptions import InputFormatError


@dataclass(frozen=True)
class IndicatorString:
    """
    The set of Pauli strings whose first ``len(prefix)`` symbols equal
    ``prefix``; the remaining positions are wildcards.
    """

    n: int
    prefix: tuple[int, ...] = ()

    def __post_init__(self):
        prefix = tuple(int(symbol) for symbol in self.prefix)
        if len(prefix) > self.n:
            raise InputFormatError(f"Prefix {prefix} is longer than n = {self.n}")
        if any(symbol not in (0, 1, 2, 3) for symbol in prefix):
            raise InputFormatError(f"Prefix symbols must be in 0..3, got {prefix}")
        object.__setattr__(self, "prefix", prefix)

    @classmethod
    def from_label(cls, label: str) -> IndicatorString:
        """'XZ**' style labels; a trailing run of '*' marks the wildcards."""
        label = label.strip().upper()
        fixed = label.rstrip("*")
        if "*" in fixed:
            raise InputFormatError(f"Wildcards must form a tail, got {label!r}")
        try:
            prefix = tuple(PAULI_LABELS.index(char) for char in fixed)
        except ValueError:
            raise InputFormatError(f"Invalid indicator string {label!r}") from None
        return cls(len(label), prefix)

    @property
    def label(self) -> str:
        fixed = "".join(PAULI_LABELS[symbol] for symbol in self.prefix)
        return fixed + "*" * (self.n - len(self.prefix))

    @property
    def is_complete(self) -> bool:
        return len(self.prefix) == self.n

    def extend(self, symbol: int) -> IndicatorString:
        return IndicatorString(self.n, self.prefix + (symbol,))

    def contains(self, s: PauliString) -> bool:
        return s.n == self.n and s.word[: len(self.prefix)] == self.prefix

    def as_pauli(self) -> PauliString:
        if not self.is_complete:
            raise InputFormatError(f"{self.label} still has wildcards")
        return PauliString(self.prefix)

    def weight(self, coefficients: np.ndarray) -> float:
        """W(S) = sum over t in S of |f̂_t|^2 from a dense coefficient tensor."""
        block = np.asarray(coefficients)[self.prefix]
        return float(np.sum(np.abs(block) ** 2))

    def __str__(self):
        return self.label

    def to_primitive(self):
        return self.label
