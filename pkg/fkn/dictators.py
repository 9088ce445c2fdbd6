"""
Level weights and the nearest dictator.

A dictator is a quantum boolean function acting on one qubit only:
a · sigma on qubit j with a a real unit vector.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from pauli_core.fourier import pauli_coefficients
from pauli_core.norms import is_quantum_boolean, require_hermitian, two_norm_squared
from pauli_core.operators import DenseOperator
from pauli_core.paulis import PAULI_MATRICES
from pauli_core.spectra import weight_grid
from pauli_core.subsystems import embed_local
from qbf_build.balancing import balance
from qbflab.conf import resolve_tolerance

logger = logging.getLogger(__name__)


def high_level_weight(f) -> float:
    """sum over |s| > 1 of |f̂_s|^2."""
    f = require_hermitian(f)
    coefficients = pauli_coefficients(f.matrix)
    return float((np.abs(coefficients[weight_grid(f.n) > 1]) ** 2).sum())


def level_one_blocks(coefficients) -> np.ndarray:
    """(n, 3) array whose row j - 1 holds f̂ on X, Y, Z at qubit j and I elsewhere."""
    n = coefficients.ndim
    blocks = np.zeros((n, 3))
    for j in range(n):
        index = [0] * n
        for symbol in (1, 2, 3):
            index[j] = symbol
            blocks[j, symbol - 1] = coefficients[tuple(index)].real
    return blocks


def dictator_operator(direction, qubit, n) -> DenseOperator:
    local = np.tensordot(np.asarray(direction, dtype=float), PAULI_MATRICES[1:], axes=1)
    return DenseOperator(embed_local(local, qubit, n), hermitian=True)


def balance_if_needed(f, tol):
    """Balanced copy of f and whether an ancilla (qubit 1) was added."""
    if abs(f.trace()) / f.dim > tol:
        return balance(f), True
    return f, False


@dataclass
class DictatorMatch:
    """
    Closest dictator found by ``nearest_dictator``. ``qubit`` is None when f
    has no weight on single-qubit strings. Qubit numbers refer to the balanced
    operator when ``balanced`` is set.
    """

    qubit: int | None
    operator: DenseOperator | None
    distance: float | None
    single_qubit_weights: np.ndarray
    balanced: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.qubit is not None

    def to_primitive(self):
        return {
            "qubit": self.qubit,
            "distance": self.distance,
            "single_qubit_weights": self.single_qubit_weights,
            "balanced": self.balanced,
            "notes": list(self.notes),
        }


def nearest_dictator(f, tol=None) -> DictatorMatch:
    """
    Keep the level-1 coefficients of the qubit carrying the most single-qubit
    weight, rescale them to a unit vector, and report distance 1/4 ||f - h||_2^2.
    """
    tol = resolve_tolerance(tol)
    f = require_hermitian(f, tol)
    f, balanced = balance_if_needed(f, tol)
    blocks = level_one_blocks(pauli_coefficients(f.matrix))
    weights = (blocks**2).sum(axis=1)
    match = DictatorMatch(None, None, None, weights, balanced=balanced)
    if balanced:
        match.notes.append("balanced first: qubit 1 is the added ancilla")

    if weights.max() <= tol**2:
        match.notes.append("no weight on single-qubit strings")
        logger.info("No dictator candidate", extra={"qubits": f.n})
        return match

    j = int(np.argmax(weights))
    h = dictator_operator(blocks[j] / np.sqrt(weights[j]), j + 1, f.n)
    match.qubit = j + 1
    match.operator = h
    match.distance = two_norm_squared(f - h) / 4
    if not is_quantum_boolean(f, tol):
        match.notes.append("input is not quantum boolean")
    return match
