"""Influences, variance and the Haar Monte-Carlo influence estimate."""

import logging

import numpy as np
from scipy.stats import unitary_group

from pauli_core.norms import require_hermitian, two_norm_squared
from pauli_core.spectra import weight_grid
from pauli_core.subsystems import validate_qubits
from qbflab.conf import get_setting
from qbflab.exceptions import ParameterRangeError
from qbflab.reports import CheckReport
from qbflab.seeding import as_generator, resolve_seed

from .derivatives import coefficient_tensor, qubit_count_of, support_mask

logger = logging.getLogger(__name__)

HAAR_AGREEMENT = 0.01


def influence_set(f, qubits) -> float:
    """I_J(f) = ||d_J(f)||_2^2."""
    n = qubit_count_of(f)
    qubits = validate_qubits(qubits, n)
    weights = np.abs(coefficient_tensor(f)) ** 2
    return float(weights[support_mask(n, qubits)].sum())


def influence(f, j) -> float:
    return influence_set(f, [j])


def influences(f) -> np.ndarray:
    """I_1(f), ..., I_n(f)."""
    weights = np.abs(coefficient_tensor(f)) ** 2
    n = weights.ndim
    axes = tuple(range(n))
    return np.array(
        [weights.sum(axis=axes[:j] + axes[j + 1 :])[1:].sum() for j in range(n)]
    )


def total_influence(f) -> float:
    """I(f) = sum_s |s| |f̂_s|^2."""
    weights = np.abs(coefficient_tensor(f)) ** 2
    return float((weights * weight_grid(weights.ndim)).sum())


def variance(f) -> float:
    """2^-n tr(f^2) - (2^-n tr f)^2, i.e. the weight off the identity string."""
    coefficients = coefficient_tensor(f)
    weights = np.abs(coefficients) ** 2
    return float(weights.sum() - weights.flat[0])


def haar_influence(f, j, samples=None, rng=None) -> CheckReport:
    """
    Estimate I_j(f) = 1/2 E_U ||[U_j, f]||_2^2 over Haar-random single-qubit U.

    For Hermitian f, 1/2 ||[U_j, f]||_2^2 = ||f||_2^2 - 2^-n tr(f U_j^† f U_j), and the
    trace only depends on U through a 2x2x2x2 contraction of f with itself.
    """
    f = require_hermitian(f)
    n = f.n
    (j,) = validate_qubits([j], n)
    if samples is None:
        samples = int(get_setting("QBF_HAAR_SAMPLES", 10000))
    if samples < 1:
        raise ParameterRangeError(f"samples must be at least 1, got {samples}")
    seed = None if isinstance(rng, np.random.Generator) else resolve_seed(rng)
    generator = as_generator(rng if seed is None else seed)

    before, after = 2 ** (j - 1), 2 ** (n - j)
    tensor = f.matrix.reshape(before, 2, after, before, 2, after)
    pairing = np.einsum("aubcvd,cydaxb->uvyx", tensor, tensor)
    unitaries = np.reshape(
        unitary_group.rvs(2, size=samples, random_state=generator), (samples, 2, 2)
    )
    overlaps = np.einsum("sux,svy,uvyx->s", unitaries.conj(), unitaries, pairing).real / 2**n
    per_sample = two_norm_squared(f) - overlaps

    estimate = float(per_sample.mean())
    exact = influence(f, j)
    standard_error = float(per_sample.std(ddof=1) / np.sqrt(samples)) if samples > 1 else None
    report = CheckReport(
        "haar-influence",
        abs(estimate - exact) <= HAAR_AGREEMENT,
        HAAR_AGREEMENT - abs(estimate - exact),
        values={
            "qubit": j,
            "samples": samples,
            "estimate": estimate,
            "exact": exact,
            "standard_error": standard_error,
        },
        seed=seed,
    )
    if not report.passed:
        logger.warning("Haar influence estimate disagrees with the spectrum", extra=report.values)
    return report
