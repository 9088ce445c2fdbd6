"""Partial traces and local embeddings on the qubit tensor structure."""

from itertools import combinations

import numpy as np

from qbflab.exceptions import QubitIndexError

from .operators import qubit_count


def validate_qubits(qubits, n):
    qubits = sorted(set(int(q) for q in qubits))
    for qubit in qubits:
        if not 1 <= qubit <= n:
            raise QubitIndexError(f"Qubit {qubit} out of range 1..{n}")
    return qubits


def _kept_then_traced(n, traced):
    traced = validate_qubits(traced, n)
    kept = [q for q in range(1, n + 1) if q not in traced]
    return [q - 1 for q in kept + traced], len(kept), len(traced)


def partial_trace(matrix, traced) -> np.ndarray:
    """tr over the 1-based ``traced`` qubits; the remaining qubits keep their order."""
    n = qubit_count(matrix.shape[0])
    order, kept, removed = _kept_then_traced(n, traced)
    tensor = np.asarray(matrix).reshape((2,) * (2 * n))
    tensor = tensor.transpose(order + [n + axis for axis in order])
    tensor = tensor.reshape(2**kept, 2**removed, 2**kept, 2**removed)
    return np.einsum("ibjb->ij", tensor)


def replace_with_identity(matrix, traced) -> np.ndarray:
    """tr_J(M) ⊗ I_J / 2^|J| laid back out in the original qubit order."""
    n = qubit_count(matrix.shape[0])
    order, _, removed = _kept_then_traced(n, traced)
    if not removed:
        return np.array(matrix, dtype=complex)
    block = 2**removed
    full = np.kron(partial_trace(matrix, traced), np.eye(block) / block)
    inverse = list(np.argsort(order))
    tensor = full.reshape((2,) * (2 * n)).transpose(inverse + [n + axis for axis in inverse])
    return tensor.reshape(2**n, 2**n)


def embed_local(local, first_qubit, n) -> np.ndarray:
    """Place ``local`` on consecutive qubits starting at ``first_qubit`` (1-based)."""
    width = qubit_count(local.shape[0])
    if first_qubit < 1 or first_qubit + width - 1 > n:
        raise QubitIndexError(
            f"A {width}-qubit block at qubit {first_qubit} does not fit in {n} qubits"
        )
    left = np.eye(2 ** (first_qubit - 1))
    right = np.eye(2 ** (n - first_qubit - width + 1))
    return np.kron(np.kron(left, local), right)


def reduced_purities(state, n) -> dict:
    """
    tr(rho_S^2) for every subset S of pair positions of a 4^n-dimensional state.

    The state lives on n pairs (A_j, A'_j), one 4-dimensional factor per
    position, ordered like the qubits. The empty subset maps to <psi|psi>^2.
    The vector is used unnormalized.
    """
    tensor = np.asarray(state, dtype=complex).reshape((4,) * n)
    purities = {}
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            rest = [axis for axis in range(n) if axis not in subset]
            flat = tensor.transpose(list(subset) + rest).reshape(4**size, 4 ** (n - size))
            rho = flat @ flat.conj().T
            purities[frozenset(q + 1 for q in subset)] = float(np.vdot(rho, rho).real)
    return purities
