"""
Monte-Carlo simulation of the two-query tests.

Measuring (f ⊗ I)|Phi> in the Bell basis twice and comparing the outcomes is
the same as drawing s and t independently with probability |f̂_s|^2 and
accepting when s = t. The damped variant keeps a matched pair with
probability (1 - delta)^|s|.
"""

import logging
import time

import numpy as np

from pauli_core.spectra import weight_grid
from qbflab.exceptions import ParameterRangeError
from qbflab.reports import ACCEPT, REJECT
from qbflab.seeding import resolve_seed, run_parallel, spawn_generators, split_counts

from .exact import (
    check_probability_parameter,
    hastad_test_probability,
    stabilizer_test_probability,
    unitary_coefficients,
)
from .results import TestReport

logger = logging.getLogger(__name__)


def bell_distribution(coefficients) -> np.ndarray:
    """|f̂_s|^2 over flat indices, renormalized against rounding."""
    probabilities = np.abs(np.asarray(coefficients).ravel()) ** 2
    return probabilities / probabilities.sum()


def _count_matches(probabilities, keep, trials, seed):
    """Accepted pairs out of ``trials``, split over independent chunk streams."""
    chunks = split_counts(trials)
    streams = spawn_generators(seed, len(chunks))

    def run_chunk(job):
        size, rng = job
        first = rng.choice(probabilities.size, size=size, p=probabilities)
        second = rng.choice(probabilities.size, size=size, p=probabilities)
        matched = first == second
        if keep is not None:
            matched &= rng.random(size) < keep[first]
        return int(np.count_nonzero(matched))

    return sum(run_parallel(run_chunk, zip(chunks, streams)))


def _verdict(fraction, epsilon):
    if epsilon is None:
        return None
    return ACCEPT if fraction >= 1 - epsilon else REJECT


def _sampled_report(test, f, exact, trials, seed, keep=None, delta=None, epsilon=None):
    trials = int(trials)
    if trials < 1:
        raise ParameterRangeError(f"trials must be at least 1, got {trials}")
    seed = resolve_seed(seed)
    started = time.perf_counter()
    probabilities = bell_distribution(unitary_coefficients(f))
    accepted = _count_matches(probabilities, keep, trials, seed)

    report = TestReport(
        test=test,
        exact_probability=exact,
        sampled_acceptance=(accepted, trials),
        epsilon_bound=epsilon,
        delta=delta,
        seed=seed,
    )
    verdict = _verdict(accepted / trials, epsilon)
    if verdict is not None:
        report.verdict = verdict
    logger.info(
        "Simulated %s test",
        test,
        extra={
            "seed": seed,
            "trials": trials,
            "accepted": accepted,
            "exact_probability": exact,
            "elapsed_seconds": time.perf_counter() - started,
        },
    )
    return report


def stabilizer_test_sample(f, trials, seed=None, epsilon=None) -> TestReport:
    """
    Run the stabilizer test ``trials`` times. With ``epsilon`` the verdict is
    accept when the sampled fraction reaches 1 - epsilon.
    """
    return _sampled_report(
        "stabilizer", f, stabilizer_test_probability(f), trials, seed, epsilon=epsilon
    )


def hastad_test_sample(f, delta, trials, seed=None, epsilon=None) -> TestReport:
    delta = check_probability_parameter(delta, "delta")
    n = unitary_coefficients(f).ndim
    keep = ((1.0 - delta) ** weight_grid(n)).ravel()
    return _sampled_report(
        "hastad",
        f,
        hastad_test_probability(f, delta),
        trials,
        seed,
        keep=keep,
        delta=delta,
        epsilon=epsilon,
    )
