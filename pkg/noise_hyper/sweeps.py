"""Randomized sweeps over the hypercontractivity grid and its corollaries."""

import itertools
import logging
import math

from qbf_build.generators import random_degree_operator, random_hermitian
from qbflab.conf import resolve_tolerance
from qbflab.reports import CheckReport
from qbflab.seeding import run_parallel, seeded_streams

from .checks import hypercontractivity_check, low_degree_norm_check, rank_bound_check

logger = logging.getLogger(__name__)

DEFAULT_P_VALUES = (1.0, 1.25, 1.5, 2.0)
DEFAULT_Q_VALUES = (2.0, 3.0, 4.0, 8.0)
DEFAULT_N_VALUES = (1, 2, 3, 4)


def hypercontractivity_sweep(
    p_values=DEFAULT_P_VALUES,
    q_values=DEFAULT_Q_VALUES,
    n_values=DEFAULT_N_VALUES,
    count=500,
    rng=None,
    epsilon=None,
    tol=None,
) -> CheckReport:
    """
    Minimum hypercontractivity margin per (p, q, n) cell over ``count`` random
    Hermitian operators. Each cell uses eps = sqrt((p - 1)/(q - 1)) unless
    ``epsilon`` is fixed.
    """
    tol = resolve_tolerance(tol)
    cells = list(itertools.product(p_values, q_values, n_values))
    seed, streams = seeded_streams(rng, len(cells))

    def run_cell(job):
        (p, q, n), stream = job
        cell_epsilon = epsilon if epsilon is not None else math.sqrt((p - 1) / (q - 1))
        margins = [
            hypercontractivity_check(random_hermitian(n, stream), p, q, cell_epsilon, tol=tol).margin
            for _ in range(count)
        ]
        return {"p": p, "q": q, "n": n, "epsilon": cell_epsilon, "min_margin": min(margins)}

    rows = run_parallel(run_cell, zip(cells, streams))
    worst = min(row["min_margin"] for row in rows)
    violations = [row for row in rows if row["min_margin"] < -tol]
    if violations:
        logger.warning(
            "Hypercontractivity sweep found cells below tolerance",
            extra={"cells": len(violations), "worst_margin": worst},
        )
    return CheckReport(
        "hypercontractivity-sweep",
        not violations,
        worst,
        values={"count": count, "cells": rows, "violations": len(violations)},
        seed=seed,
    )


def corollary_sweep(count=500, max_qubits=4, max_degree=3, rng=None, tol=None) -> CheckReport:
    """Low-degree norm and rank-bound margins over random degree-d operators."""
    tol = resolve_tolerance(tol)
    cells = [
        (n, d) for n in range(1, max_qubits + 1) for d in range(0, min(max_degree, n) + 1)
    ]
    seed, streams = seeded_streams(rng, len(cells))
    per_cell = max(1, math.ceil(count / len(cells)))

    def run_cell(job):
        (n, d), stream = job
        low_degree, rank = [], []
        for _ in range(per_cell):
            f = random_degree_operator(n, d, stream)
            low_degree.append(low_degree_norm_check(f, 4.0, tol=tol).margin)
            rank.append(rank_bound_check(f, tol=tol).margin)
        return {
            "n": n,
            "degree": d,
            "min_low_degree_margin": min(low_degree),
            "min_rank_margin": min(rank),
        }

    rows = run_parallel(run_cell, zip(cells, streams))
    worst = min(min(row["min_low_degree_margin"], row["min_rank_margin"]) for row in rows)
    return CheckReport(
        "corollary-sweep",
        worst >= -tol,
        worst,
        values={"operators": per_cell * len(cells), "cells": rows},
        seed=seed,
    )
