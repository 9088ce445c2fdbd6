"""
Numerical checks of the hypercontractive inequality and its corollaries.

Every check returns a CheckReport whose margin is nonnegative when the
inequality holds. ``passed`` is None outside the regime where the
inequality is a theorem.
"""

import logging
import math

import numpy as np
from scipy import linalg

from pauli_core.fourier import pauli_coefficients
from pauli_core.norms import (
    operator_norm,
    parse_exponent,
    require_hermitian,
    schatten_norm,
    two_norm_squared,
)
from pauli_core.spectra import level_weights
from qbflab.conf import get_setting, resolve_tolerance
from qbflab.exceptions import NotProjectorError, ParameterRangeError, PreconditionError
from qbflab.reports import CheckReport

from .noise import check_noise_rate, is_completely_positive, noisy_operator

logger = logging.getLogger(__name__)

LOG2_E = math.log2(math.e)


def theorem_regime(p, q, epsilon) -> bool:
    """
    1 <= p <= 2 <= q and |eps| <= sqrt((p - 1)/(q - 1)).

    T_-eps is T_eps followed by a spectrum-preserving map, so only |eps| matters.
    """
    if not 1 <= p <= 2 <= q:
        return False
    return base_case_regime(p, q, epsilon)


def base_case_regime(p, q, epsilon) -> bool:
    """The single-qubit inequality holds for every 1 <= p <= q."""
    if not 1 <= p <= q:
        return False
    epsilon = abs(epsilon)
    if math.isinf(q):
        return epsilon == 0
    return epsilon <= math.sqrt((p - 1) / (q - 1))


def degree(coefficients, tol) -> int:
    weights = level_weights(coefficients)
    nonzero = np.flatnonzero(weights > tol**2)
    return int(nonzero[-1]) if nonzero.size else 0


def _verdict(margin, in_regime, tol):
    return margin >= -tol if in_regime else None


def hypercontractivity_check(f, p, q, epsilon, tol=None) -> CheckReport:
    """margin = ||f||_p - ||T_eps f||_q."""
    tol = resolve_tolerance(tol)
    f = require_hermitian(f, tol)
    p, q = parse_exponent(p), parse_exponent(q)
    epsilon = check_noise_rate(epsilon)

    lhs = schatten_norm(noisy_operator(f, epsilon), q)
    rhs = schatten_norm(f, p)
    margin = rhs - lhs
    in_regime = theorem_regime(p, q, epsilon)
    report = CheckReport(
        "hypercontractivity",
        _verdict(margin, in_regime, tol),
        margin,
        values={
            "p": p,
            "q": q,
            "epsilon": epsilon,
            "noisy_q_norm": lhs,
            "p_norm": rhs,
            "in_theorem_regime": in_regime,
        },
    )
    if not is_completely_positive(epsilon):
        report.notes.append("noise rate below -1/3: T_eps is not a channel")
    if report.passed is False:
        logger.warning("Hypercontractivity margin below tolerance", extra=report.values)
    return report


def two_point_check(a, b, p, q, epsilon, tol=None) -> CheckReport:
    """
    The single-qubit case on diag(a + b, a - b):
    ((|a + eps b|^q + |a - eps b|^q)/2)^(1/q) <= ((|a + b|^p + |a - b|^p)/2)^(1/p).
    """
    tol = resolve_tolerance(tol)
    p, q = parse_exponent(p), parse_exponent(q)
    epsilon = check_noise_rate(epsilon)

    def mean_norm(values, r):
        values = np.abs(np.asarray(values, dtype=float))
        if math.isinf(r):
            return float(values.max())
        return float(np.mean(values**r) ** (1 / r))

    lhs = mean_norm([a + epsilon * b, a - epsilon * b], q)
    rhs = mean_norm([a + b, a - b], p)
    in_regime = base_case_regime(p, q, epsilon)
    return CheckReport(
        "two-point",
        _verdict(rhs - lhs, in_regime, tol),
        rhs - lhs,
        values={"a": a, "b": b, "p": p, "q": q, "epsilon": epsilon, "in_regime": in_regime},
    )


def low_degree_norm_check(f, q, p=None, tol=None) -> CheckReport:
    """
    ||f||_q <= (q - 1)^(d/2) ||f||_2 for q >= 2 and
    ||f||_p >= (p - 1)^(d/2) ||f||_2 for p <= 2 (p defaults to the dual of q).
    """
    tol = resolve_tolerance(tol)
    f = require_hermitian(f, tol)
    q = parse_exponent(q)
    if math.isinf(q) or q < 2:
        raise ParameterRangeError(f"Need a finite q >= 2, got {q}")
    p = q / (q - 1) if p is None else parse_exponent(p)
    if p > 2:
        raise ParameterRangeError(f"Need 1 <= p <= 2, got {p}")

    d = degree(pauli_coefficients(f.matrix), tol)
    two = math.sqrt(two_norm_squared(f))
    upper_margin = (q - 1) ** (d / 2) * two - schatten_norm(f, q)
    lower_margin = schatten_norm(f, p) - (p - 1) ** (d / 2) * two
    margin = min(upper_margin, lower_margin)
    return CheckReport(
        "low-degree-norm",
        margin >= -tol,
        margin,
        values={
            "degree": d,
            "q": q,
            "p": p,
            "upper_margin": upper_margin,
            "lower_margin": lower_margin,
        },
    )


def rank_bound_check(f, q=None, tol=None) -> CheckReport:
    """
    m >= 2^(n - 2 log2(e) d) for m nonzero eigenvalues and degree d; with a
    finite q > 2 also m >= 2^n / ((q - 1)^(q/(q - 2)))^d.
    """
    tol = resolve_tolerance(tol)
    f = require_hermitian(f, tol)
    scale = operator_norm(f.matrix)
    if scale == 0:
        raise PreconditionError("The rank bound needs a non-zero operator")
    relative = float(get_setting("QBF_RANK_TOLERANCE", 1e-8))
    eigenvalues = linalg.eigvalsh(f.matrix)
    m = int(np.count_nonzero(np.abs(eigenvalues) > relative * scale))
    d = degree(pauli_coefficients(f.matrix), tol)
    n = f.n

    bound = 2.0 ** (n - 2 * LOG2_E * d)
    values = {"nonzero_eigenvalues": m, "degree": d, "bound": bound}
    margin = m - bound
    if q is not None:
        q = parse_exponent(q)
        if math.isinf(q) or q <= 2:
            raise ParameterRangeError(f"Need a finite q > 2, got {q}")
        finite_bound = 2.0**n / ((q - 1) ** (q / (q - 2))) ** d
        values.update(q=q, finite_q_bound=finite_bound)
        margin = min(margin, m - finite_bound)
    return CheckReport("rank-bound", margin >= -tol, margin, values=values)


def projector_level1_check(P, q, tol=None) -> CheckReport:
    """||P^{=1}||_2^2 <= (q - 1) ||P||_1^(2/p) with 1/p + 1/q = 1."""
    tol = resolve_tolerance(tol)
    P = require_hermitian(P, tol)
    defect = operator_norm(P.matrix @ P.matrix - P.matrix)
    if defect > tol:
        raise NotProjectorError(f"Input is not a projector: ||P^2 - P||_inf = {defect:.3e}")
    q = parse_exponent(q)
    if math.isinf(q) or q <= 1:
        raise ParameterRangeError(f"Need a finite q > 1, got {q}")
    p = q / (q - 1)

    weights = level_weights(pauli_coefficients(P.matrix))
    level_one = float(weights[1]) if weights.size > 1 else 0.0
    bound = (q - 1) * schatten_norm(P, 1) ** (2 / p)
    return CheckReport(
        "projector-level-1",
        bound - level_one >= -tol,
        bound - level_one,
        values={"level_one_weight": level_one, "bound": bound, "q": q, "p": p},
    )
