"""
Influence inequalities: Poincaré, the Talagrand-style bound, bad influence and
the KKL bound for anticommuting quantum boolean functions.
"""

import logging
import math
from itertools import combinations

import numpy as np

from pauli_core.fourier import pauli_coefficients
from pauli_core.norms import (
    is_quantum_boolean,
    operator_norm,
    require_hermitian,
    require_quantum_boolean,
    schatten_norm,
    two_norm_squared,
)
from pauli_core.operators import DenseOperator
from pauli_core.paulis import PauliString
from pauli_core.spectra import sparsity_threshold, weight_grid
from qbflab.conf import get_setting, resolve_tolerance
from qbflab.exceptions import AnticommutationError, NotTracelessError
from qbflab.reports import CheckReport

from .derivatives import derivative, derivative_set
from .influences import influence_set, influences, total_influence, variance

logger = logging.getLogger(__name__)


def poincare_check(f, tol=None) -> CheckReport:
    """var(f) <= I(f); traceless quantum boolean f also needs max_j I_j >= 1/n."""
    tol = resolve_tolerance(tol)
    f = require_hermitian(f, tol)
    var, total = variance(f), total_influence(f)
    per_qubit = influences(f)
    values = {"variance": var, "total_influence": total, "influences": per_qubit}
    margin = total - var
    passed = margin >= -tol

    if is_quantum_boolean(f, tol) and abs(f.trace()) / f.dim <= tol:
        largest = float(per_qubit.max())
        floor_margin = largest - 1 / f.n
        values.update(max_influence=largest, influence_floor=1 / f.n, floor_margin=floor_margin)
        passed = passed and floor_margin >= -tol
    return CheckReport("poincare", passed, margin, values=values)


def _log(value):
    base = float(get_setting("QBF_TALAGRAND_LOG_BASE", 2.0))
    return math.log(value) / math.log(base)


def m_squared(coefficients) -> float:
    """M^2(g) = sum over s != 0 of |ĝ_s|^2 / |s|."""
    grid = weight_grid(coefficients.ndim)
    weights = np.abs(coefficients) ** 2
    nonzero = grid > 0
    return float((weights[nonzero] / grid[nonzero]).sum())


def talagrand_check(f, tol=None) -> CheckReport:
    """
    ||f||_2^2 <= sum_i 10 ||d_i f||_2^2 / ((2/3) log(||d_i f||_2 / ||d_i f||_1) + 1)
    for traceless Hermitian f. Also reports M^2(d_i f) per qubit, which sums to
    ||f||_2^2.
    """
    tol = resolve_tolerance(tol)
    f = require_hermitian(f, tol)
    if abs(f.trace()) / f.dim > tol:
        raise NotTracelessError(f"Talagrand bound needs tr f = 0, got tr f / 2^n = {f.trace() / f.dim:.3e}")

    terms, m_values = [], []
    for j in range(1, f.n + 1):
        d = derivative(f, j)
        m_values.append(m_squared(pauli_coefficients(d.matrix)))
        two = math.sqrt(two_norm_squared(d))
        if two <= tol:
            terms.append(0.0)
            continue
        one = schatten_norm(d, 1)
        terms.append(10 * two**2 / ((2 / 3) * _log(two / one) + 1))

    lhs = two_norm_squared(f)
    rhs = float(sum(terms))
    return CheckReport(
        "talagrand",
        rhs - lhs >= -tol,
        rhs - lhs,
        values={
            "two_norm_squared": lhs,
            "bound": rhs,
            "terms": terms,
            "m_squared": m_values,
            "m_squared_total": float(sum(m_values)),
            "log_base": float(get_setting("QBF_TALAGRAND_LOG_BASE", 2.0)),
        },
    )


def bad_influence_detect(f, qubits, tol=None) -> CheckReport:
    """
    J has bad influence on f when ||d_J f||_2 = ||d_J f||_1. In that case f splits
    as sqrt(1 - a^2) f' ⊗ I_J + a g with f', g quantum boolean, anticommuting,
    and a^2 = I_J(f); the split is built and verified.
    """
    tol = resolve_tolerance(tol)
    f = require_quantum_boolean(f, tol)
    d = derivative_set(f, qubits)
    two = math.sqrt(two_norm_squared(d))
    one = schatten_norm(d, 1)
    values = {"qubits": sorted(qubits), "two_norm": two, "one_norm": one}

    if two <= tol:
        report = CheckReport("bad-influence", None, None, values=values)
        report.notes.append("d_J(f) vanishes: structure check skipped")
        return report

    bad = abs(two - one) <= tol
    report = CheckReport("bad-influence", bad, one - two, values=values)
    if not bad:
        return report

    alpha = two
    g = d / alpha
    rest = f - d
    identity = DenseOperator.identity(f.n)
    anticommutator = rest @ g + g @ rest
    values.update(
        alpha_squared=alpha**2,
        influence=influence_set(f, qubits),
        g_square_defect=operator_norm((g @ g - identity).matrix),
        anticommutator_norm=operator_norm(anticommutator.matrix),
    )
    if alpha < 1 - tol:
        f_prime = rest / math.sqrt(1 - alpha**2)
        values["f_prime_square_defect"] = operator_norm((f_prime @ f_prime - identity).matrix)
    structure_holds = all(
        values[key] <= math.sqrt(tol)
        for key in ("g_square_defect", "anticommutator_norm", "f_prime_square_defect")
        if key in values
    )
    values["structure_holds"] = structure_holds
    if not structure_holds:
        report.passed = False
        report.notes.append("J is bad but the split into f' and g failed to verify")
        logger.warning("Bad influence split failed to verify", extra={"qubits": values["qubits"]})
    return report


def anticommuting_terms(f) -> list:
    """Retained spectrum strings, checked to anticommute pairwise."""
    coefficients = pauli_coefficients(f.matrix)
    strings = [
        PauliString(tuple(int(d) for d in index))
        for index in np.argwhere(np.abs(coefficients) > sparsity_threshold())
    ]
    for first, second in combinations(strings, 2):
        if not first.anticommutes_with(second):
            raise AnticommutationError(
                f"Spectrum terms {first} and {second} commute", pair=(first, second)
            )
    return strings


def anticommuting_kkl_check(f, tol=None) -> CheckReport:
    """sum_j I_j^2 >= 1 and max_j I_j >= 1/sqrt(n) for anticommuting quantum boolean f."""
    tol = resolve_tolerance(tol)
    f = require_quantum_boolean(f, tol)
    terms = anticommuting_terms(f)
    per_qubit = influences(f)
    squares = float((per_qubit**2).sum())
    largest = float(per_qubit.max())
    floor = 1 / math.sqrt(f.n)
    margin = min(squares - 1, largest - floor)
    return CheckReport(
        "anticommuting-kkl",
        margin >= -tol,
        margin,
        values={
            "terms": [s.label for s in terms],
            "influences": per_qubit,
            "sum_of_squares": squares,
            "max_influence": largest,
            "influence_floor": floor,
        },
    )
