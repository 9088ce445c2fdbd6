"""
Bell sampling, coefficient estimation and weight estimation on an OracleHandle.

A control-qubit circuit whose '0' outcome has probability 1/2 + x/2 gives the
estimate 2 * fraction - 1 of x. Hoeffding on that +-1 variable needs
ceil(2 ln(2/delta) / r^2) runs for radius r at confidence 1 - delta.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from pauli_core.paulis import PauliString
from qbflab.exceptions import ParameterRangeError

from .indicators import IndicatorString

# Oracle uses per run of each circuit
COEFFICIENT_QUERIES_PER_DRAW = 1
WEIGHT_QUERIES_PER_DRAW = 4


@dataclass
class WeightEstimate:
    value: float
    radius: float
    confidence: float
    queries_used: int


def check_open_unit(value, name):
    value = float(value)
    if not 0.0 < value < 1.0:
        raise ParameterRangeError(f"{name} must lie in (0, 1), got {value}")
    return value


def hoeffding_draws(radius, delta) -> int:
    """Runs needed so that 2 * fraction - 1 is within ``radius`` with probability 1 - delta."""
    if radius <= 0:
        raise ParameterRangeError(f"radius must be positive, got {radius}")
    return math.ceil(2 * math.log(2 / delta) / radius**2)


def bell_sample(oracle) -> PauliString:
    """Measure (f ⊗ I)|Phi> in the Bell basis: s with probability |f̂_s|^2, one query."""
    (index,) = oracle.draw_strings(1)
    return PauliString.from_index(int(index), oracle.n)


def identify_stabilizer(oracle) -> PauliString:
    """One Bell sample; exact when f is promised to be ±sigma^s."""
    return bell_sample(oracle)


def robust_identify(oracle, epsilon, delta) -> PauliString | None:
    """
    Majority vote over ceil(ln(1/delta) / (2 epsilon^2)) Bell samples.

    Returns None when no string wins a strict majority.
    """
    epsilon = check_open_unit(epsilon, "epsilon")
    delta = check_open_unit(delta, "delta")
    q = math.ceil(math.log(1 / delta) / (2 * epsilon**2))
    winner, votes = Counter(oracle.draw_strings(q).tolist()).most_common(1)[0]
    if 2 * votes <= q:
        return None
    return PauliString.from_index(int(winner), oracle.n)


def estimate_coefficient(oracle, s: PauliString, eta, delta, part="real") -> float:
    """
    Estimate Re(f̂_s) (or Im(f̂_s) with ``part="imag"``, which adds a phase
    gate on the control) to within eta with probability 1 - delta.
    """
    eta = check_open_unit(eta, "eta")
    delta = check_open_unit(delta, "delta")
    if part not in ("real", "imag"):
        raise ParameterRangeError(f"part must be 'real' or 'imag', got {part!r}")
    coefficient = oracle.coefficient(s)
    value = coefficient.real if part == "real" else coefficient.imag

    draws = hoeffding_draws(eta, delta)
    oracle.charge(COEFFICIENT_QUERIES_PER_DRAW * draws)
    return 2 * oracle.success_fraction(0.5 + 0.5 * value, draws) - 1


def estimate_weight(oracle, S: IndicatorString, gamma, delta, radius=None) -> WeightEstimate:
    """
    Estimate W(S) to within gamma^2 / 4 (or ``radius``) with probability 1 - delta.

    The true weight comes from the cached spectrum and only sets the success
    probability 1/2 + W(S)/2 of the simulated circuit.
    """
    gamma = check_open_unit(gamma, "gamma")
    delta = check_open_unit(delta, "delta")
    if S.n != oracle.n:
        raise ParameterRangeError(f"Indicator string has n = {S.n}, oracle has n = {oracle.n}")
    if radius is None:
        radius = gamma**2 / 4

    draws = hoeffding_draws(radius, delta)
    queries = WEIGHT_QUERIES_PER_DRAW * draws
    oracle.charge(queries)
    value = 2 * oracle.success_fraction(0.5 + 0.5 * S.weight(oracle.coefficients), draws) - 1
    value = float(np.clip(value, -radius, 1 + radius))
    return WeightEstimate(value, radius, 1 - delta, queries)
