"""
Seeded random instances used by sweeps and tests.

All generators take ``rng`` as an integer seed or a ``numpy.random.Generator``.
"""

from functools import reduce

import numpy as np
from scipy.stats import unitary_group

from pauli_core.fourier import matrix_from_coefficients
from pauli_core.operators import DenseOperator
from pauli_core.paulis import PAULI_MATRICES, PauliString, pauli_matrix
from pauli_core.spectra import weight_grid
from qbflab.exceptions import ParameterRangeError
from qbflab.seeding import as_generator


def random_hermitian(n, rng=None) -> DenseOperator:
    rng = as_generator(rng)
    dim = 2**n
    matrix = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return DenseOperator((matrix + matrix.conj().T) / 2, hermitian=True)


def random_traceless_hermitian(n, rng=None) -> DenseOperator:
    h = random_hermitian(n, rng).matrix
    return DenseOperator(h - np.trace(h) / h.shape[0] * np.eye(h.shape[0]), hermitian=True)


def random_unitary(n, rng=None) -> np.ndarray:
    """Haar-random unitary (Gaussian matrix, QR, phase-corrected)."""
    return unitary_group.rvs(2**n, random_state=as_generator(rng))


def random_quantum_boolean(n, rng=None, traceless=False) -> DenseOperator:
    """U diag(±1) U† with U Haar-random; ``traceless`` forces equal ±1 counts."""
    rng = as_generator(rng)
    dim = 2**n
    if traceless:
        signs = rng.permutation(np.repeat([1.0, -1.0], dim // 2))
    else:
        signs = rng.choice([1.0, -1.0], size=dim)
    u = random_unitary(n, rng)
    matrix = (u * signs) @ u.conj().T
    return DenseOperator((matrix + matrix.conj().T) / 2, hermitian=True)


def random_stabilizer(n, rng=None, include_identity=True) -> DenseOperator:
    """±sigma^s for a uniformly random word s."""
    rng = as_generator(rng)
    low = 0 if include_identity else 1
    index = int(rng.integers(low, 4**n))
    sign = float(rng.choice([1.0, -1.0]))
    return sign * pauli_matrix(PauliString.from_index(index, n))


def random_single_qubit_qbf(rng=None) -> DenseOperator:
    """a · sigma for a uniformly random unit vector a."""
    rng = as_generator(rng)
    direction = rng.normal(size=3)
    direction /= np.linalg.norm(direction)
    return DenseOperator(np.tensordot(direction, PAULI_MATRICES[1:], axes=1), hermitian=True)


def random_local_qbf(n, rng=None) -> DenseOperator:
    rng = as_generator(rng)
    factors = [random_single_qubit_qbf(rng).matrix for _ in range(n)]
    return DenseOperator(reduce(np.kron, factors), hermitian=True)


def random_degree_operator(n, degree, rng=None) -> DenseOperator:
    """Hermitian operator with Gaussian real coefficients on every string of weight <= degree."""
    rng = as_generator(rng)
    if not 0 <= degree <= n:
        raise ParameterRangeError(f"Degree must lie in 0..{n}, got {degree}")
    coefficients = rng.normal(size=(4,) * n) * (weight_grid(n) <= degree)
    return DenseOperator(matrix_from_coefficients(coefficients), hermitian=True)


def anticommuting_family(n, rng=None) -> list:
    """
    2n + 1 pairwise anticommuting Pauli strings.

    Starts from the Jordan-Wigner strings Z..Z X I..I, Z..Z Y I..I and Z..Z,
    then relabels X, Y, Z independently on each qubit and shuffles the qubits.
    Both moves preserve every commutation relation.
    """
    rng = as_generator(rng)
    words = []
    for k in range(n):
        for symbol in (1, 2):
            words.append([3] * k + [symbol] + [0] * (n - k - 1))
    words.append([3] * n)

    relabel = [np.concatenate(([0], 1 + rng.permutation(3))) for _ in range(n)]
    order = rng.permutation(n)
    family = []
    for word in words:
        mapped = [int(relabel[q][word[q]]) for q in range(n)]
        family.append(PauliString(tuple(mapped[q] for q in order)))
    return family


def random_anticommuting_qbf(n, terms, rng=None):
    """
    Normalized real combination of ``terms`` pairwise anticommuting strings.

    Returns the operator and the chosen strings.
    """
    rng = as_generator(rng)
    family = anticommuting_family(n, rng)
    if not 1 <= terms <= len(family):
        raise ParameterRangeError(f"Between 1 and {len(family)} terms fit on {n} qubits")
    chosen = [family[i] for i in rng.choice(len(family), size=terms, replace=False)]
    alphas = rng.normal(size=terms)
    alphas /= np.linalg.norm(alphas)
    matrix = sum(a * pauli_matrix(s).matrix for a, s in zip(alphas, chosen))
    return DenseOperator(matrix, hermitian=True), chosen


def random_planted_spectrum(n, magnitudes, rng=None):
    """
    Quantum boolean function with the given coefficient magnitudes planted on
    anticommuting strings (random signs); the leftover weight is spread evenly
    over the remaining strings of the family.

    Returns the operator and a dict PauliString -> planted coefficient.
    """
    rng = as_generator(rng)
    magnitudes = [float(m) for m in magnitudes]
    family = anticommuting_family(n, rng)
    planted_weight = sum(m * m for m in magnitudes)
    if planted_weight > 1 + 1e-12 or len(magnitudes) > len(family):
        raise ParameterRangeError("Planted magnitudes do not fit in a quantum boolean function")

    order = rng.permutation(len(family))
    strings = [family[i] for i in order]
    fillers = len(family) - len(magnitudes)
    leftover = max(0.0, 1.0 - planted_weight)
    if leftover > 1e-12 and fillers == 0:
        raise ParameterRangeError("No room left for the remaining weight")
    filler = np.sqrt(leftover / fillers) if fillers and leftover > 1e-12 else 0.0

    values = magnitudes + [filler] * fillers
    coefficients = {}
    for s, value in zip(strings, values):
        if value > 0:
            coefficients[s] = float(value * rng.choice([1.0, -1.0]))
    matrix = sum(c * pauli_matrix(s).matrix for s, c in coefficients.items())
    return DenseOperator(matrix, hermitian=True), coefficients
