"""Sparse Pauli spectra and their level statistics."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Callable, Mapping

import numpy as np

from qbflab.conf import get_setting
from qbflab.exceptions import DimensionMismatchError

from .paulis import PauliString


def sparsity_threshold():
    return float(get_setting("QBF_SPARSITY_THRESHOLD", 1e-12))


@lru_cache(maxsize=None)
def weight_grid(n: int) -> np.ndarray:
    """|s| for every flat Pauli index, shaped (4,) * n."""
    grid = np.zeros((4,) * n, dtype=np.int64)
    nontrivial = (np.arange(4) != 0).astype(np.int64)
    for axis in range(n):
        shape = [1] * n
        shape[axis] = 4
        grid = grid + nontrivial.reshape(shape)
    grid.setflags(write=False)
    return grid


@dataclass(frozen=True, eq=False)
class Spectrum:
    """
    Pauli coefficients of an operator on ``n`` qubits.

    Coefficients whose magnitude is at or below the sparsity threshold are not
    stored. Hermitian spectra hold real floats, general ones complex values.
    Missing keys read as zero.
    """

    n: int
    coeffs: Mapping[PauliString, complex]
    hermitian: bool = True

    def __post_init__(self):
        threshold = sparsity_threshold()
        kept = {}
        for key, value in self.coeffs.items():
            if isinstance(key, str):
                key = PauliString.from_label(key)
            if key.n != self.n:
                raise DimensionMismatchError(
                    f"Pauli string {key} has {key.n} qubits, spectrum has {self.n}"
                )
            value = complex(value)
            if abs(value) <= threshold:
                continue
            kept[key] = value.real if self.hermitian else value
        ordered = dict(sorted(kept.items(), key=lambda item: item[0].index))
        object.__setattr__(self, "coeffs", MappingProxyType(ordered))

    @classmethod
    def from_array(cls, array: np.ndarray, hermitian: bool = True) -> Spectrum:
        array = np.asarray(array)
        n = array.ndim
        threshold = sparsity_threshold()
        coeffs = {
            PauliString(tuple(int(d) for d in digits)): array[tuple(digits)]
            for digits in np.argwhere(np.abs(array) > threshold)
        }
        return cls(n, coeffs, hermitian=hermitian)

    def to_array(self) -> np.ndarray:
        array = np.zeros((4,) * self.n, dtype=float if self.hermitian else complex)
        for key, value in self.coeffs.items():
            array[key.word] = value
        return array

    def __getitem__(self, key):
        if isinstance(key, str):
            key = PauliString.from_label(key)
        return self.coeffs.get(key, 0.0)

    def __contains__(self, key):
        if isinstance(key, str):
            key = PauliString.from_label(key)
        return key in self.coeffs

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def items(self):
        return self.coeffs.items()

    def total_weight(self) -> float:
        return float(sum(abs(value) ** 2 for value in self.coeffs.values()))

    def filter(self, predicate: Callable[[PauliString], bool]) -> Spectrum:
        return Spectrum(
            self.n,
            {key: value for key, value in self.coeffs.items() if predicate(key)},
            hermitian=self.hermitian,
        )

    def allclose(self, other: Spectrum, atol=1e-10) -> bool:
        if self.n != other.n:
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        return all(abs(self[key] - other[key]) <= atol for key in keys)

    def to_primitive(self):
        return {key.label: value for key, value in self.coeffs.items()}

    def __repr__(self):
        body = ", ".join(f"{key}: {value:.6g}" for key, value in self.coeffs.items())
        return f"Spectrum(n={self.n}, {{{body}}})"


@dataclass(frozen=True)
class SpectrumStats:
    spectrum: Spectrum
    degree: int
    support: frozenset
    weight_per_level: tuple

    def level_projection(self, k: int) -> Spectrum:
        """f^{=k}: keep only strings of weight exactly ``k``."""
        return self.spectrum.filter(lambda key: key.weight == k)

    def to_primitive(self):
        return {
            "degree": self.degree,
            "support": sorted(self.support),
            "weight_per_level": list(self.weight_per_level),
        }


def spectrum_stats(spec: Spectrum) -> SpectrumStats:
    degree = max((key.weight for key in spec), default=0)
    support = frozenset().union(*(key.support for key in spec))
    weights = [0.0] * (degree + 1)
    for key, value in spec.items():
        weights[key.weight] += abs(value) ** 2
    return SpectrumStats(spec, degree, support, tuple(weights))


def level_weights(coefficients: np.ndarray) -> np.ndarray:
    """Weight per level from a dense (4,)*n coefficient array, index = level."""
    n = coefficients.ndim
    return np.bincount(
        weight_grid(n).ravel(),
        weights=(np.abs(coefficients) ** 2).ravel(),
        minlength=n + 1,
    )


def commutation_class(spec: Spectrum) -> str:
    """'single', 'commuting', 'anticommuting' or 'mixed' for the retained terms."""
    keys = list(spec)
    if len(keys) <= 1:
        return "single"
    relations = {
        a.anticommutes_with(b) for i, a in enumerate(keys) for b in keys[i + 1 :]
    }
    if relations == {True}:
        return "anticommuting"
    if relations == {False}:
        return "commuting"
    return "mixed"
