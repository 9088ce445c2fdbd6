import math

import numpy as np
from django.test import SimpleTestCase

from noise_hyper.checks import (
    hypercontractivity_check,
    low_degree_norm_check,
    projector_level1_check,
    rank_bound_check,
    two_point_check,
)
from noise_hyper.search import search_violation
from noise_hyper.sweeps import corollary_sweep, hypercontractivity_sweep
from pauli_core.operators import DenseOperator
from pauli_core.paulis import PauliString, pauli_matrix
from qbf_build.generators import random_degree_operator, random_hermitian
from qbflab.exceptions import NotProjectorError, ParameterRangeError, PreconditionError


def label(text):
    return pauli_matrix(PauliString.from_label(text))


def zero_projector(n):
    matrix = np.zeros((2**n, 2**n))
    matrix[0, 0] = 1.0
    return DenseOperator(matrix)


class HypercontractivityCheckTest(SimpleTestCase):
    def test_identity(self):
        """Both norms of I are 1, so the margin is 0."""
        report = hypercontractivity_check(DenseOperator.identity(2), 1.5, 3, 0.5)
        self.assertAlmostEqual(report.margin, 0.0, places=12)
        self.assertTrue(report.passed)

    def test_random_operators_in_regime(self):
        """500 random 3-qubit operators at (2, 4, 1/sqrt(3)) never fall below -1e-9."""
        rng = np.random.default_rng(1)
        margins = [
            hypercontractivity_check(random_hermitian(3, rng), 2, 4, 1 / math.sqrt(3)).margin
            for _ in range(500)
        ]
        self.assertGreaterEqual(min(margins), -1e-9)

    def test_outside_regime_is_informational(self):
        """A noise rate above sqrt((p-1)/(q-1)) gives no verdict."""
        report = hypercontractivity_check(label("Z"), 2, 4, 0.9)
        self.assertIsNone(report.passed)
        self.assertFalse(report.values["in_theorem_regime"])

    def test_non_channel_rate_noted(self):
        """Rates below -1/3 are flagged."""
        report = hypercontractivity_check(label("Z"), 2, 2, -0.5)
        self.assertTrue(report.notes)

    def test_single_qubit_diagonal_matches_two_point(self):
        """diag(a + b, a - b) reduces to the two-point inequality."""
        for a, b in ((1.0, 0.3), (0.2, -1.4), (0.5, 0.5)):
            f = DenseOperator.from_diagonal([a + b, a - b])
            for p, q in ((1.25, 3), (2, 8), (1.5, 2)):
                epsilon = math.sqrt((p - 1) / (q - 1))
                self.assertAlmostEqual(
                    hypercontractivity_check(f, p, q, epsilon).margin,
                    two_point_check(a, b, p, q, epsilon).margin,
                    places=10,
                )

    def test_two_point_beyond_p_two(self):
        """The base case also holds for 2 < p <= q."""
        report = two_point_check(1.0, 0.8, 3, 5, math.sqrt(2 / 4))
        self.assertTrue(report.passed)
        self.assertIsNone(two_point_check(1.0, 0.8, 5, 3, 0.1).passed)


class CorollaryCheckTest(SimpleTestCase):
    def test_low_degree_pauli(self):
        """||sigma^3||_4 = 1 <= sqrt(3)."""
        report = low_degree_norm_check(label("Z"), 4)
        self.assertEqual(report.values["degree"], 1)
        self.assertAlmostEqual(report.values["upper_margin"], math.sqrt(3) - 1)

    def test_low_degree_identity(self):
        """d = 0 gives equality on both sides."""
        report = low_degree_norm_check(DenseOperator.identity(2), 4)
        self.assertAlmostEqual(report.margin, 0.0, places=12)

    def test_low_degree_random(self):
        """Random degree-2 operators respect both bounds."""
        rng = np.random.default_rng(9)
        for _ in range(50):
            self.assertGreaterEqual(
                low_degree_norm_check(random_degree_operator(3, 2, rng), 4).margin, -1e-10
            )

    def test_low_degree_rejects_infinity(self):
        """The bound is vacuous at q = inf."""
        with self.assertRaises(ParameterRangeError):
            low_degree_norm_check(label("Z"), "inf")

    def test_rank_full_tensor(self):
        """sigma^3 tensor power: m = 2^n and d = n."""
        report = rank_bound_check(label("ZZZ"))
        self.assertEqual(report.values["nonzero_eigenvalues"], 8)
        self.assertEqual(report.values["degree"], 3)
        self.assertTrue(report.passed)

    def test_rank_one_projector(self):
        """The projector onto |000> has m = 1 and d = 3."""
        report = rank_bound_check(zero_projector(3))
        self.assertEqual(report.values["nonzero_eigenvalues"], 1)
        self.assertEqual(report.values["degree"], 3)
        self.assertLess(report.values["bound"], 1)
        self.assertTrue(report.passed)

    def test_rank_shifted_pauli(self):
        """sigma^1 + 0.1 I: bound about 0.54 <= 2."""
        report = rank_bound_check(label("X") + 0.1 * DenseOperator.identity(1))
        self.assertEqual(report.values["nonzero_eigenvalues"], 2)
        self.assertAlmostEqual(report.values["bound"], 2 ** (1 - 2 * math.log2(math.e)))

    def test_rank_finite_q(self):
        """A finite q reports its own bound."""
        report = rank_bound_check(zero_projector(2), q=4)
        self.assertAlmostEqual(report.values["finite_q_bound"], 4 / (3**2) ** 2)

    def test_rank_zero_operator(self):
        """The zero operator has no rank bound."""
        with self.assertRaises(PreconditionError):
            rank_bound_check(DenseOperator.zeros(2))

    def test_projector_level_one(self):
        """diag(1, 0) at q = 3: 1/4 <= 2 (1/2)^(4/3)."""
        report = projector_level1_check(DenseOperator.from_diagonal([1, 0]), 3)
        self.assertAlmostEqual(report.values["level_one_weight"], 0.25)
        self.assertAlmostEqual(report.values["bound"], 2 * 0.5 ** (4 / 3))
        self.assertTrue(report.passed)

    def test_projector_trivial_cases(self):
        """P = 0 and P = I have no level-1 weight."""
        for P in (DenseOperator.zeros(2), DenseOperator.identity(2)):
            report = projector_level1_check(P, 3)
            self.assertAlmostEqual(report.values["level_one_weight"], 0.0)
            self.assertTrue(report.passed)

    def test_projector_required(self):
        """sigma^3 is not a projector."""
        with self.assertRaises(NotProjectorError):
            projector_level1_check(label("Z"), 3)


class SweepTest(SimpleTestCase):
    def test_acceptance_grid_small(self):
        """Every cell of the (p, q, n) grid stays above -1e-9."""
        report = hypercontractivity_sweep(count=15, rng=3)
        self.assertTrue(report.passed)
        self.assertEqual(len(report.values["cells"]), 64)
        self.assertEqual(report.seed, 3)

    def test_corollaries(self):
        """Low-degree and rank margins are nonnegative."""
        report = corollary_sweep(count=60, rng=5)
        self.assertTrue(report.passed)
        self.assertGreaterEqual(report.margin, -1e-9)

    def test_reproducible(self):
        """Equal seeds give equal sweeps."""
        first = hypercontractivity_sweep((2.0,), (4.0,), (2,), count=10, rng=8)
        second = hypercontractivity_sweep((2.0,), (4.0,), (2,), count=10, rng=8)
        self.assertEqual(first.margin, second.margin)


class SearchViolationTest(SimpleTestCase):
    def test_regime_bounded(self):
        """The optimizer finds no ratio above 1 + 1e-6 in the proven regime."""
        report = search_violation(2, 4, 1 / math.sqrt(3), 2, 6, rng=11)
        self.assertTrue(report.passed)
        self.assertGreater(report.values["best_ratio"], 0.8)

    def test_full_noise(self):
        """At eps = 0 only the identity component survives."""
        report = search_violation(1.5, 3, 0.0, 1, 3, rng=2)
        self.assertLessEqual(report.values["best_ratio"], 1 + 1e-9)

    def test_no_noise_equal_exponents(self):
        """At eps = 1 and p = q the ratio is 1."""
        report = search_violation(3, 3, 1.0, 1, 2, rng=4)
        self.assertAlmostEqual(report.values["best_ratio"], 1.0, places=9)
        self.assertIsNone(report.passed)

    def test_order_of_exponents(self):
        """p must not exceed q."""
        with self.assertRaises(ParameterRangeError):
            search_violation(4, 2, 0.5, 1, 1)
