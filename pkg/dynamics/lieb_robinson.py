"""
Lieb-Robinson profiles: how far the truncated evolution under H_Lambda
strays from the full evolution as the bond window Lambda grows.
"""

import logging
import math

import numpy as np

from pauli_core.norms import operator_norm, two_norm_squared
from qbflab.reports import CheckReport
from qbflab.seeding import run_parallel

from .chains import window
from .evolution import evolve_observable, truncated_evolution

logger = logging.getLogger(__name__)

MONOTONE_SLACK = 1e-12
DISCREPANCY_FLOOR = 1e-15


def lieb_robinson_profile(H, qubit, symbol, t, radii=None) -> CheckReport:
    """
    Per radius r, the window of bonds within r of ``qubit`` and the
    discrepancies 2^-n ||sigma(t) - sigma_Lambda(t)||_2^2 and
    ||sigma(t) - sigma_Lambda(t)||_inf. Growth of the 2-norm discrepancy with
    |Lambda| is listed under ``violations``; the profile itself asserts nothing.
    """
    if radii is None:
        radii = range(1, H.n)
    radii = sorted(set(int(r) for r in radii))
    full = evolve_observable(H, qubit, symbol, t)

    windows = []
    for radius in radii:
        bonds = window(H.n, qubit, radius)
        if bonds not in [w for _, w in windows]:
            windows.append((radius, bonds))

    def discrepancy(item):
        radius, bonds = item
        difference = full - truncated_evolution(H, qubit, symbol, t, bonds)
        return {
            "radius": radius,
            "bonds": len(bonds),
            "window": bonds,
            "time": float(t),
            "discrepancy": two_norm_squared(difference),
            "infty_discrepancy": operator_norm(difference.matrix),
        }

    rows = run_parallel(discrepancy, windows)
    violations = [
        {"bonds": later["bonds"], "increase": later["discrepancy"] - earlier["discrepancy"]}
        for earlier, later in zip(rows, rows[1:])
        if later["discrepancy"] - earlier["discrepancy"] > MONOTONE_SLACK
    ]
    if violations:
        logger.info("Discrepancy grew with the window", extra={"violations": len(violations), "time": t})

    report = CheckReport(
        "lieb-robinson-profile",
        None,
        values={"qubit": qubit, "symbol": symbol, "time": float(t), "rows": rows, "violations": violations},
    )
    report.notes.append("Lambda is a set of bond indices")
    return report


def profile_points(report):
    """(|Lambda|, discrepancy) pairs of a profile."""
    return [(row["bonds"], row["discrepancy"]) for row in report.values["rows"]]


def fit_light_cone(rows) -> dict:
    """
    Least-squares fit of log(discrepancy) = a + k t - v |Lambda| over rows from
    one or more profiles. With a single time k is folded into the intercept and
    reported as None. Rows at or below the numerical floor are skipped.
    """
    usable = [row for row in rows if row["discrepancy"] > DISCREPANCY_FLOOR]
    times = sorted({row["time"] for row in usable})
    result = {"points": len(usable), "intercept": None, "c": None, "k": None, "v": None}
    columns = 3 if len(times) > 1 else 2
    if len(usable) < columns:
        logger.info("Too few points to fit a light cone", extra={"points": len(usable)})
        return result

    design = [[1.0, -float(row["bonds"])] + ([row["time"]] if columns == 3 else []) for row in usable]
    target = [math.log(row["discrepancy"]) for row in usable]
    solution, *_ = np.linalg.lstsq(np.array(design), np.array(target), rcond=None)
    result.update(intercept=float(solution[0]), c=math.exp(solution[0]), v=float(solution[1]))
    if columns == 3:
        result["k"] = float(solution[2])
    return result
