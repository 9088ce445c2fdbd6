"""Verdict extraction for the stabilizer and Håstad tests."""

import logging

import numpy as np

from pauli_core.paulis import PauliString
from pauli_core.spectra import weight_grid
from qbflab.conf import resolve_tolerance
from qbflab.reports import ACCEPT, INCONCLUSIVE, REJECT

from .exact import (
    hastad_test_probability,
    stabilizer_test_probability,
    unitary_coefficients,
)
from .results import TestReport

logger = logging.getLogger(__name__)

HASTAD_EPSILON_LIMIT = 0.01


def _witness(coefficients, flat_index):
    s = PauliString.from_index(int(flat_index), coefficients.ndim)
    return s, float(np.angle(coefficients.ravel()[flat_index]))


def stabilizer_verdict(f, epsilon, tol=None) -> TestReport:
    """
    Accept when the acceptance probability reaches 1 - epsilon, reporting the
    unique s with |f̂_s|^2 >= 1 - epsilon and its phase. epsilon >= 1/2 and
    ties at the top coefficient are inconclusive.
    """
    tol = resolve_tolerance(tol)
    epsilon = float(epsilon)
    probability = stabilizer_test_probability(f)
    report = TestReport("stabilizer", probability, epsilon_bound=epsilon)

    if epsilon >= 0.5 or epsilon < 0:
        logger.warning("Stabilizer verdict needs 0 <= epsilon < 1/2", extra={"epsilon": epsilon})
        return report
    if probability < 1 - epsilon:
        report.verdict = REJECT
        return report

    coefficients = unitary_coefficients(f)
    weights = np.abs(coefficients.ravel()) ** 2
    order = np.argsort(weights)[::-1]
    if weights.size > 1 and weights[order[0]] - weights[order[1]] <= tol:
        return report

    report.witness, report.phase = _witness(coefficients, order[0])
    report.verdict = ACCEPT if weights[order[0]] >= 1 - epsilon - tol else INCONCLUSIVE
    return report


def hastad_verdict(f, epsilon) -> TestReport:
    """
    Run the Håstad test at delta = 3 epsilon / 4 and, on acceptance, return
    the weight <= 1 string carrying at least 1 - epsilon of the weight.

    The guarantee needs epsilon <= 0.01; larger values are reported as
    inconclusive.
    """
    epsilon = float(epsilon)
    delta = 0.75 * epsilon
    probability = hastad_test_probability(f, delta)
    report = TestReport("hastad", probability, epsilon_bound=epsilon, delta=delta)
    if epsilon > HASTAD_EPSILON_LIMIT:
        return report
    if probability < 1 - epsilon:
        report.verdict = REJECT
        return report

    coefficients = unitary_coefficients(f)
    weights = np.abs(coefficients.ravel()) ** 2
    low = weight_grid(coefficients.ndim).ravel() <= 1
    candidates = np.flatnonzero(low & (weights >= 1 - epsilon))
    if candidates.size:
        best = candidates[np.argmax(weights[candidates])]
        report.witness, report.phase = _witness(coefficients, best)
        report.verdict = ACCEPT
    return report
