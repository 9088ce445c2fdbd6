"""Exact, 2-norm and infinity-norm FKN checks."""

import logging
import math

import numpy as np
from scipy import linalg

from pauli_core.fourier import matrix_from_coefficients, pauli_coefficients
from pauli_core.norms import (
    is_quantum_boolean,
    operator_norm,
    require_hermitian,
    require_quantum_boolean,
    two_norm_squared,
)
from pauli_core.operators import DenseOperator, require_same_size
from pauli_core.spectra import weight_grid
from qbf_build.constructors import sign_function
from qbflab.conf import resolve_tolerance
from qbflab.exceptions import DegreeError, ParameterRangeError, PreconditionError
from qbflab.reports import CheckReport

from .dictators import balance_if_needed, high_level_weight, level_one_blocks

logger = logging.getLogger(__name__)

DEGREE_TWO_SQRT_FACTOR = 9.0


def exact_fkn_check(f, tol=None) -> CheckReport:
    """
    A quantum boolean function with no weight above level 1 is a dictator or a
    constant: with lambda_i the length of the level-1 coefficient triple on
    qubit i, sum_i lambda_i = 1 with a single nonzero lambda.
    """
    tol = resolve_tolerance(tol)
    f = require_hermitian(f, tol)
    if not is_quantum_boolean(f, tol):
        square_defect = operator_norm(f.matrix @ f.matrix - np.eye(f.dim))
        report = CheckReport(
            "exact-fkn",
            False,
            -square_defect,
            values={"classification": "not-quantum-boolean", "square_defect": square_defect},
        )
        report.notes.append("f^2 != I at the requested tolerance")
        return report

    constant_weight = abs(f.trace() / f.dim) ** 2
    if constant_weight >= 1 - tol:
        return CheckReport(
            "exact-fkn", True, 0.0, values={"classification": "constant", "level_zero_weight": constant_weight}
        )

    f, balanced = balance_if_needed(f, tol)
    high = high_level_weight(f)
    if high > tol:
        raise PreconditionError(f"Exact FKN needs zero weight above level 1, measured {high:.3e}")

    lambdas = np.sqrt((level_one_blocks(pauli_coefficients(f.matrix)) ** 2).sum(axis=1))
    nonzero = np.flatnonzero(lambdas > math.sqrt(tol))
    total = float(lambdas.sum())
    dictator = len(nonzero) == 1 and abs(total - 1) <= math.sqrt(tol)
    values = {
        "classification": "dictator" if dictator else "unclassified",
        "lambdas": lambdas,
        "lambda_sum": total,
        "balanced": balanced,
    }
    if dictator:
        values["qubit"] = int(nonzero[0]) + 1
    report = CheckReport("exact-fkn", dictator, 1 - total if dictator else -abs(total - 1), values=values)
    if balanced:
        report.notes.append("balanced first: qubit 1 is the added ancilla")
    return report


def degree_two_diagnostic(f, tol=None) -> CheckReport:
    """
    On q = l^2 - ||l||_2^2 I for the level-1 part l of f, check
    ||q||_2^2 <= delta^2 (1 - p) / (1 - 9 sqrt(p)) at each threshold delta with
    9 sqrt(p) < 1, p being the fraction of eigenvalues of q above delta in
    absolute value.
    """
    tol = resolve_tolerance(tol)
    f = require_hermitian(f, tol)
    coefficients = pauli_coefficients(f.matrix)
    level_one = np.where(weight_grid(f.n) == 1, coefficients, 0)
    l_matrix = matrix_from_coefficients(level_one)
    weight = float((np.abs(level_one) ** 2).sum())
    q = DenseOperator(l_matrix @ l_matrix - weight * np.eye(f.dim), hermitian=True)

    magnitudes = np.abs(linalg.eigvalsh(q.matrix))
    q_norm = two_norm_squared(q)
    rows = []
    for delta in np.unique(magnitudes):
        p = float(np.mean(magnitudes > delta))
        if DEGREE_TWO_SQRT_FACTOR * math.sqrt(p) >= 1:
            continue
        bound = delta**2 * (1 - p) / (1 - DEGREE_TWO_SQRT_FACTOR * math.sqrt(p))
        rows.append({"delta": float(delta), "p": p, "bound": bound, "margin": bound - q_norm})
    margin = min(row["margin"] for row in rows)
    return CheckReport(
        "degree-two",
        margin >= -tol,
        margin,
        values={"q_two_norm_squared": q_norm, "thresholds": rows},
    )


def _require_level_one(g, tol):
    coefficients = pauli_coefficients(g.matrix)
    outside = float((np.abs(coefficients[weight_grid(g.n) != 1]) ** 2).sum())
    if outside > tol:
        raise DegreeError(f"g must be supported on level 1, weight elsewhere is {outside:.3e}")


def fkn_infty_check(f, g, epsilon, tol=None) -> CheckReport:
    """
    If ||f - g||_inf <= eps < 1/2 with g = g^{=1} Hermitian, the dictator
    h = sgn(g) satisfies ||f - h||_inf <= 2 eps.
    """
    tol = resolve_tolerance(tol)
    epsilon = float(epsilon)
    if not 0 <= epsilon < 0.5:
        raise ParameterRangeError(f"Need 0 <= epsilon < 1/2, got {epsilon}")
    g = require_hermitian(g, tol)
    f = require_quantum_boolean(f, tol)
    require_same_size(f, g)
    _require_level_one(g, tol)

    f, balanced = balance_if_needed(f, tol)
    if balanced:
        g = DenseOperator(np.kron(np.eye(2), g.matrix), hermitian=True)

    gap = operator_norm((f - g).matrix)
    if gap > epsilon + tol:
        raise PreconditionError(f"||f - g||_inf = {gap:.6g} exceeds epsilon = {epsilon}")

    h = sign_function(g)
    distance = operator_norm((f - h).matrix)
    pairing = np.abs(linalg.eigvalsh(f.matrix)[::-1] - linalg.eigvalsh(g.matrix)[::-1])
    support = [
        j + 1
        for j, row in enumerate(level_one_blocks(pauli_coefficients(h.matrix)))
        if np.abs(row).max() > math.sqrt(tol)
    ]
    report = CheckReport(
        "infty-fkn",
        distance <= 2 * epsilon + tol,
        2 * epsilon - distance,
        values={
            "epsilon": epsilon,
            "f_g_distance": gap,
            "f_h_distance": distance,
            "max_eigenvalue_shift": float(pairing.max()),
            "dictator_qubits": support,
            "balanced": balanced,
        },
    )
    if balanced:
        report.notes.append("balanced first: g extended by the identity on the ancilla")
    if report.passed is False:
        logger.warning("Infinity-norm FKN bound exceeded", extra={"distance": distance, "epsilon": epsilon})
    return report
