"""Randomized sweeps reporting the worst margin of each influence inequality."""

import logging

from qbf_build.generators import (
    random_anticommuting_qbf,
    random_hermitian,
    random_quantum_boolean,
    random_traceless_hermitian,
)
from qbflab.conf import resolve_tolerance
from qbflab.reports import CheckReport
from qbflab.seeding import run_parallel, seeded_streams

from .kkl import anticommuting_kkl_check, poincare_check, talagrand_check

logger = logging.getLogger(__name__)


def _sweep(name, count, max_qubits, rng, tol, make_instance, check):
    tol = resolve_tolerance(tol)
    seed, streams = seeded_streams(rng, count)

    def run_one(job):
        index, stream = job
        n = 1 + index % max_qubits
        report = check(make_instance(n, stream), tol=tol)
        return min(report.margin, report.values.get("floor_margin", report.margin))

    margins = run_parallel(run_one, enumerate(streams))
    worst = min(margins)
    failures = sum(margin < -tol for margin in margins)
    if failures:
        logger.warning("%s sweep found violations", name, extra={"failures": failures})
    return CheckReport(
        f"{name}-sweep",
        failures == 0,
        worst,
        values={"count": count, "max_qubits": max_qubits, "failures": failures},
        seed=seed,
    )


def poincare_sweep(count=1000, max_qubits=4, rng=None, tol=None, traceless_boolean=False) -> CheckReport:
    """
    Random Hermitian operators, or random traceless quantum boolean functions
    when ``traceless_boolean`` is set (which adds the 1/n influence floor).
    """
    def make(n, stream):
        if traceless_boolean:
            return random_quantum_boolean(n, stream, traceless=True)
        return random_hermitian(n, stream)

    return _sweep("poincare", count, max_qubits, rng, tol, make, poincare_check)


def talagrand_sweep(count=1000, max_qubits=4, rng=None, tol=None) -> CheckReport:
    return _sweep("talagrand", count, max_qubits, rng, tol, random_traceless_hermitian, talagrand_check)


def kkl_sweep(count=200, max_qubits=6, rng=None, tol=None) -> CheckReport:
    """Random real combinations of pairwise anticommuting strings."""

    def make(n, stream):
        terms = int(stream.integers(1, 2 * n + 2))
        operator, _ = random_anticommuting_qbf(n, terms, stream)
        return operator

    return _sweep("anticommuting-kkl", count, max_qubits, rng, tol, make, anticommuting_kkl_check)
