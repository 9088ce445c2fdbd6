"""
Optimization search for violations of ||T_eps f||_q <= ||f||_p.

Hermitian f is parameterized by its real Pauli coefficient vector; the ratio is
scale invariant so the vector is normalized before each evaluation.
"""

import logging
import math
import time

import numpy as np
from scipy import optimize

from pauli_core.fourier import matrix_from_coefficients
from pauli_core.norms import parse_exponent, schatten_norm
from pauli_core.operators import DenseOperator
from pauli_core.spectra import Spectrum
from qbflab.conf import get_setting
from qbflab.exceptions import ParameterRangeError
from qbflab.reports import CheckReport
from qbflab.seeding import run_parallel, seeded_streams

from .checks import theorem_regime
from .noise import check_noise_rate, noise_multipliers

logger = logging.getLogger(__name__)

RATIO_SLACK = 1e-6


def norm_ratio(vector, n, p, q, multipliers) -> float:
    norm = np.linalg.norm(vector)
    if norm == 0:
        return 0.0
    coefficients = (vector / norm).reshape((4,) * n)
    f = DenseOperator(matrix_from_coefficients(coefficients), hermitian=True)
    noisy = DenseOperator(matrix_from_coefficients(coefficients * multipliers), hermitian=True)
    denominator = schatten_norm(f, p)
    if denominator == 0:
        return 0.0
    return schatten_norm(noisy, q) / denominator


def _local_search(rng, n, p, q, multipliers, max_evaluations):
    start = rng.standard_normal(4**n)
    result = optimize.minimize(
        lambda x: -norm_ratio(x, n, p, q, multipliers),
        start,
        method="Powell",
        options={"maxfev": max_evaluations, "xtol": 1e-8, "ftol": 1e-12},
    )
    vector = result.x / (np.linalg.norm(result.x) or 1.0)
    return -float(result.fun), vector


def search_violation(p, q, epsilon, n, restarts, rng=None) -> CheckReport:
    """
    Maximize ||T_eps f||_q / ||f||_p over Hermitian f with random restarts.

    In the proven regime a best ratio above 1 + 1e-6 fails the report; outside
    it the result is informational and ``passed`` is None.
    """
    p, q = parse_exponent(p), parse_exponent(q)
    if p > q:
        raise ParameterRangeError(f"Need p <= q, got p={p}, q={q}")
    epsilon = check_noise_rate(epsilon)
    if n < 1 or restarts < 1:
        raise ParameterRangeError("Need at least one qubit and one restart")

    seed, streams = seeded_streams(rng, restarts)
    multipliers = noise_multipliers(n, epsilon)
    max_evaluations = int(get_setting("QBF_SEARCH_MAX_ITERATIONS", 2000))

    started = time.monotonic()
    outcomes = run_parallel(
        lambda stream: _local_search(stream, n, p, q, multipliers, max_evaluations), streams
    )
    best_ratio, best_vector = max(outcomes, key=lambda outcome: outcome[0])

    in_regime = theorem_regime(p, q, epsilon)
    argmax = Spectrum.from_array(best_vector.reshape((4,) * n))
    report = CheckReport(
        "hypercontractivity-search",
        best_ratio <= 1 + RATIO_SLACK if in_regime else None,
        1 + RATIO_SLACK - best_ratio,
        values={
            "p": p,
            "q": q,
            "epsilon": epsilon,
            "n": n,
            "restarts": restarts,
            "best_ratio": best_ratio,
            "argmax": argmax,
            "in_theorem_regime": in_regime,
        },
        seed=seed,
    )
    if not in_regime:
        report.notes.append("outside the proven regime: exploratory only")
    if not math.isfinite(best_ratio):
        report.notes.append("search produced a non-finite ratio")
    logger.info(
        "Hypercontractivity search finished",
        extra={
            "best_ratio": best_ratio,
            "restarts": restarts,
            "n": n,
            "elapsed_seconds": round(time.monotonic() - started, 3),
        },
    )
    return report
