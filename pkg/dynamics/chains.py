"""
One-dimensional chain Hamiltonians H = sum_b h_b.

Bond b (1 <= b <= n - 1) carries a Hermitian 4 x 4 block acting on qubits b
and b + 1. A truncated Hamiltonian H_Lambda keeps the blocks of the bonds in
Lambda, so Lambda is always a set of bond indices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from pauli_core.norms import operator_norm
from pauli_core.subsystems import embed_local
from qbflab.conf import get_setting, resolve_tolerance
from qbflab.exceptions import (
    CapacityError,
    MalformedOperatorError,
    NotHermitianError,
    ParameterRangeError,
    QubitIndexError,
)
from qbflab.seeding import as_generator

logger = logging.getLogger(__name__)


def random_bond(rng) -> np.ndarray:
    """Gaussian Hermitian 4 x 4 block rescaled to operator norm 1."""
    block = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    block = (block + block.conj().T) / 2
    return block / operator_norm(block)


@dataclass(frozen=True, eq=False)
class ChainHamiltonian:
    n: int
    terms: tuple
    norm_cap: float = 1.0

    def __post_init__(self):
        n = int(self.n)
        if n < 2:
            raise ParameterRangeError(f"A chain needs at least 2 qubits, got {n}")
        terms = tuple(np.array(term, dtype=complex) for term in self.terms)
        if len(terms) != n - 1:
            raise MalformedOperatorError(f"A {n}-qubit chain has {n - 1} bonds, got {len(terms)} blocks")

        tol = resolve_tolerance()
        for bond, term in enumerate(terms, start=1):
            if term.shape != (4, 4):
                raise MalformedOperatorError(f"Bond {bond} block has shape {term.shape}, expected (4, 4)")
            if operator_norm(term - term.conj().T) > tol:
                raise NotHermitianError(f"Bond {bond} block is not Hermitian")
            norm = operator_norm(term)
            if norm > self.norm_cap + tol:
                raise ParameterRangeError(
                    f"Bond {bond} has ||h||_inf = {norm:.6g} above the cap {self.norm_cap}"
                )
            term.setflags(write=False)

        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def random(cls, n, rng=None, norm_cap=1.0) -> ChainHamiltonian:
        rng = as_generator(rng)
        return cls(n, tuple(norm_cap * random_bond(rng) for _ in range(n - 1)), norm_cap)

    @classmethod
    def zero(cls, n) -> ChainHamiltonian:
        return cls(n, tuple(np.zeros((4, 4)) for _ in range(n - 1)))

    @property
    def bonds(self) -> list[int]:
        return list(range(1, self.n))

    def dense(self, bonds=None) -> np.ndarray:
        """H, or H_Lambda for the bond set ``bonds``, as a dense 2^n x 2^n matrix."""
        require_dense_capacity(self.n)
        bonds = self.bonds if bonds is None else validate_bonds(bonds, self.n)
        matrix = np.zeros((2**self.n, 2**self.n), dtype=complex)
        for bond in bonds:
            matrix += embed_local(self.terms[bond - 1], bond, self.n)
        return matrix

    def to_primitive(self):
        return {"n": self.n, "norm_cap": self.norm_cap, "bonds": len(self.terms)}


def require_dense_capacity(n):
    ceiling = int(get_setting("QBF_DENSE_MAX_QUBITS", 10))
    if n > ceiling:
        raise CapacityError(f"Dense evolution on {n} qubits is above the ceiling n = {ceiling}")


def validate_bonds(bonds, n) -> list[int]:
    bonds = sorted(set(int(bond) for bond in bonds))
    for bond in bonds:
        if not 1 <= bond <= n - 1:
            raise QubitIndexError(f"Bond {bond} out of range 1..{n - 1}")
    return bonds


def validate_window(bonds, n, qubit) -> list[int]:
    """A contiguous, non-empty bond set with a bond acting on ``qubit``."""
    bonds = validate_bonds(bonds, n)
    if not bonds:
        raise ParameterRangeError("The bond window is empty")
    if bonds[-1] - bonds[0] + 1 != len(bonds):
        raise ParameterRangeError(f"Bond window {bonds} is not contiguous")
    if not (bonds[0] <= qubit <= bonds[-1] + 1):
        raise ParameterRangeError(f"Bond window {bonds} does not touch qubit {qubit}")
    return bonds


def window(n, qubit, radius) -> list[int]:
    """Bonds with both qubits within ``radius`` of ``qubit``, clipped to the chain."""
    radius = int(radius)
    if radius < 1:
        raise ParameterRangeError(f"Radius must be at least 1, got {radius}")
    return list(range(max(1, qubit - radius), min(n - 1, qubit + radius - 1) + 1))
