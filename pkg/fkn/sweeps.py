"""Evidence sweeps for the 2-norm and infinity-norm FKN statements."""

import logging
import math

import numpy as np

from pauli_core.fourier import matrix_from_coefficients
from pauli_core.norms import operator_norm
from pauli_core.operators import DenseOperator
from pauli_core.paulis import pauli_matrix
from pauli_core.spectra import weight_grid
from qbf_build.constructors import anticommuting_combination
from qbf_build.generators import anticommuting_family
from qbflab.conf import resolve_tolerance
from qbflab.reports import CheckReport
from qbflab.seeding import as_generator, run_parallel, seeded_streams

from .checks import degree_two_diagnostic, fkn_infty_check
from .dictators import high_level_weight, nearest_dictator

logger = logging.getLogger(__name__)

DEFAULT_THETAS = tuple(np.linspace(0.05, 0.5, 10))


def dictator_and_partner(n=2, rng=None):
    """
    A weight-1 Pauli string and an anticommuting partner. Without ``rng`` this
    is sigma^3 on qubit 1 with sigma^1 ⊗ sigma^1 ⊗ I...; otherwise both come
    from a random anticommuting family on n qubits.
    """
    if rng is None:
        dictator = np.zeros((4,) * n)
        dictator[(3,) + (0,) * (n - 1)] = 1.0
        partner = np.zeros((4,) * n)
        partner[(1, 1) + (0,) * (n - 2)] = 1.0
        return (
            DenseOperator(matrix_from_coefficients(dictator), hermitian=True),
            DenseOperator(matrix_from_coefficients(partner), hermitian=True),
        )
    rng = as_generator(rng)
    family = anticommuting_family(n, rng)
    singles = [s for s in family if s.weight == 1]
    dictator = singles[int(rng.integers(len(singles)))]
    others = [s for s in family if s != dictator]
    partner = others[int(rng.integers(len(others)))]
    return pauli_matrix(dictator), pauli_matrix(partner)


def two_norm_fkn_sweep(thetas=DEFAULT_THETAS, n=2, rng=None, tol=None) -> CheckReport:
    """
    f_theta = cos(theta) dictator + sin(theta) partner. Reports the ratio of the
    nearest-dictator distance to the weight above level 1 and its maximum as
    the fitted constant; the degree-2 diagnostic on each f_theta decides
    ``passed``.
    """
    tol = resolve_tolerance(tol)
    dictator, partner = dictator_and_partner(n, rng)
    rows = []
    for theta in thetas:
        theta = float(theta)
        f = anticommuting_combination([math.cos(theta), math.sin(theta)], [dictator, partner], tol)
        high = high_level_weight(f)
        match = nearest_dictator(f, tol)
        diagnostic = degree_two_diagnostic(f, tol)
        rows.append(
            {
                "theta": theta,
                "high_level_weight": high,
                "distance": match.distance,
                "ratio": match.distance / high if high > tol else None,
                "degree_two_margin": diagnostic.margin,
            }
        )

    ratios = [row["ratio"] for row in rows if row["ratio"] is not None]
    fitted = max(ratios) if ratios else None
    worst = min(row["degree_two_margin"] for row in rows)
    report = CheckReport(
        "two-norm-fkn-sweep",
        worst >= -tol,
        worst,
        values={"fitted_constant": fitted, "rows": rows},
    )
    report.notes.append("the fitted constant is evidence only")
    return report


def random_level_one(n, rng) -> DenseOperator:
    """Hermitian level-1 operator with unit operator norm."""
    coefficients = rng.normal(size=(4,) * n) * (weight_grid(n) == 1)
    matrix = matrix_from_coefficients(coefficients)
    return DenseOperator(matrix / operator_norm(matrix), hermitian=True)


def infty_fkn_instance(rng, max_qubits=4):
    """
    A valid (f, g, eps): f = cos(t) d + sin(t) p for a dictator d and an
    anticommuting partner p, g = cos(t) d plus a small level-1 perturbation,
    eps = sin(t) + eta bounds ||f - g||_inf and stays below 1/2.
    """
    n = int(rng.integers(2, max_qubits + 1))
    dictator, partner = dictator_and_partner(n, rng)
    theta = float(rng.uniform(0.0, math.asin(0.4)))
    eta = float(rng.uniform(0.0, 0.45 - math.sin(theta)))
    f = math.cos(theta) * dictator + math.sin(theta) * partner
    g = math.cos(theta) * dictator + eta * random_level_one(n, rng)
    return f, g, math.sin(theta) + eta


def infty_fkn_sweep(count=100, rng=None, max_qubits=4, tol=None) -> CheckReport:
    tol = resolve_tolerance(tol)
    seed, streams = seeded_streams(rng, count)

    def run_one(stream):
        f, g, epsilon = infty_fkn_instance(stream, max_qubits)
        return fkn_infty_check(f, g, epsilon, tol).margin

    margins = run_parallel(run_one, streams)
    failures = sum(margin < -tol for margin in margins)
    if failures:
        logger.warning("Infinity-norm FKN sweep found violations", extra={"failures": failures})
    return CheckReport(
        "infty-fkn-sweep",
        failures == 0,
        min(margins),
        values={"count": count, "failures": failures},
        seed=seed,
    )
