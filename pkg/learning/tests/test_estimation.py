import math

import numpy as np
from django.test import SimpleTestCase

from learning.estimation import (
    bell_sample,
    estimate_coefficient,
    estimate_weight,
    hoeffding_draws,
    identify_stabilizer,
    robust_identify,
)
from learning.indicators import IndicatorString
from learning.oracle import OracleHandle
from learning.serializers import WeightEstimateSerializer
from pauli_core.paulis import PauliString, pauli_matrix
from qbf_build.generators import random_quantum_boolean
from qbflab.exceptions import InputFormatError, NotUnitaryError, ParameterRangeError


def label(text):
    return pauli_matrix(PauliString.from_label(text))


def small_coefficient_operator():
    return 0.6 * label("XX") + 0.8 * label("YI")


class OracleHandleTest(SimpleTestCase):
    def test_requires_unitary(self):
        """Only unitary operators can be queried."""
        with self.assertRaises(NotUnitaryError):
            OracleHandle(2 * np.eye(2))

    def test_seed_recorded(self):
        """A missing seed is drawn and kept."""
        self.assertIsInstance(OracleHandle(label("Z")).seed, int)


class IndicatorStringTest(SimpleTestCase):
    def test_label_round_trip(self):
        """'XZ**' keeps its prefix and wildcard count."""
        S = IndicatorString.from_label("XZ**")
        self.assertEqual(S.prefix, (1, 3))
        self.assertEqual(S.n, 4)
        self.assertEqual(S.label, "XZ**")

    def test_contains_and_extend(self):
        """Membership follows the fixed prefix."""
        S = IndicatorString(3, (1,))
        self.assertTrue(S.contains(PauliString.from_label("XYZ")))
        self.assertFalse(S.contains(PauliString.from_label("YYZ")))
        self.assertEqual(S.extend(2).label, "XY*")

    def test_wildcards_form_a_tail(self):
        """Wildcards in the middle are rejected."""
        with self.assertRaises(InputFormatError):
            IndicatorString.from_label("X*Z")

    def test_weight(self):
        """W(X*) of the small-coefficient operator is 0.36."""
        oracle = OracleHandle(small_coefficient_operator(), seed=1)
        self.assertAlmostEqual(IndicatorString(2, (1,)).weight(oracle.coefficients), 0.36)
        self.assertAlmostEqual(IndicatorString(2).weight(oracle.coefficients), 1.0)


class BellSampleTest(SimpleTestCase):
    def test_stabilizer_identified(self):
        """sigma^1 ⊗ sigma^2 is always found with one query."""
        oracle = OracleHandle(label("XY"), seed=3)
        for _ in range(20):
            self.assertEqual(bell_sample(oracle), PauliString((1, 2)))
        self.assertEqual(oracle.query_count, 20)

    def test_identity(self):
        """The identity always yields II."""
        oracle = OracleHandle(np.eye(4), seed=3)
        self.assertEqual(identify_stabilizer(oracle).label, "II")
        self.assertEqual(oracle.query_count, 1)

    def test_small_coefficient_frequencies(self):
        """XX appears with frequency about 0.36, YI about 0.64."""
        oracle = OracleHandle(small_coefficient_operator(), seed=5)
        draws = [bell_sample(oracle).label for _ in range(4000)]
        self.assertEqual(set(draws), {"XX", "YI"})
        self.assertAlmostEqual(draws.count("XX") / 4000, 0.36, delta=0.04)

    def test_distribution_matches_spectrum(self):
        """10^5 draws are within total variation 0.02 of |f̂_s|^2."""
        oracle = OracleHandle(random_quantum_boolean(3, 8), seed=9)
        draws = oracle.draw_strings(100_000)
        empirical = np.bincount(draws, minlength=64) / draws.size
        self.assertLessEqual(0.5 * np.abs(empirical - oracle.bell_probabilities).sum(), 0.02)


class RobustIdentifyTest(SimpleTestCase):
    def test_stabilizer(self):
        """sigma^3 is found for any parameters."""
        oracle = OracleHandle(label("Z"), seed=1)
        self.assertEqual(robust_identify(oracle, 0.2, 0.1).label, "Z")

    def test_query_accounting(self):
        """Exactly ceil(ln(1/delta) / (2 epsilon^2)) queries are used."""
        oracle = OracleHandle(label("Z"), seed=1)
        robust_identify(oracle, 0.3, 0.01)
        self.assertEqual(oracle.query_count, math.ceil(math.log(100) / (2 * 0.09)))

    def test_dominant_coefficient(self):
        """f̂_ZI = 0.99 is recovered in at least 99% of 1000 runs."""
        f = 0.99 * label("ZI") + math.sqrt(1 - 0.99**2) * label("XI")
        oracle = OracleHandle(f, seed=2025)
        hits = sum(robust_identify(oracle, 0.3, 0.01) == PauliString((3, 0)) for _ in range(1000))
        self.assertGreaterEqual(hits, 990)

    def test_no_majority(self):
        """A three-way even split has no strict majority."""
        f = (label("X") + label("Y") + label("Z")) / math.sqrt(3)
        oracle = OracleHandle(f, seed=4)
        self.assertIsNone(robust_identify(oracle, 0.05, 0.5))


class CoefficientEstimateTest(SimpleTestCase):
    def test_point_mass(self):
        """The estimate of f̂_Z for sigma^3 is exactly 1."""
        oracle = OracleHandle(label("Z"), seed=1)
        self.assertEqual(estimate_coefficient(oracle, PauliString((3,)), 0.1, 0.1), 1.0)
        self.assertEqual(oracle.query_count, hoeffding_draws(0.1, 0.1))

    def test_concentration(self):
        """f̂_YI = 0.8 is estimated within 0.05 in at least 99% of runs."""
        oracle = OracleHandle(small_coefficient_operator(), seed=17)
        s = PauliString.from_label("YI")
        misses = sum(abs(estimate_coefficient(oracle, s, 0.05, 0.01) - 0.8) > 0.05 for _ in range(200))
        self.assertLessEqual(misses, 2)

    def test_orthogonal_string(self):
        """f̂_X of the identity concentrates at 0."""
        oracle = OracleHandle(np.eye(2), seed=2)
        self.assertAlmostEqual(estimate_coefficient(oracle, PauliString((1,)), 0.05, 0.01), 0.0, delta=0.05)

    def test_imaginary_part(self):
        """i sigma^3 has Re f̂_Z = 0 and Im f̂_Z = 1."""
        oracle = OracleHandle(1j * label("Z").matrix, seed=2, exact=True)
        s = PauliString((3,))
        self.assertAlmostEqual(estimate_coefficient(oracle, s, 0.1, 0.1), 0.0)
        self.assertAlmostEqual(estimate_coefficient(oracle, s, 0.1, 0.1, part="imag"), 1.0)

    def test_parameter_range(self):
        """eta must lie strictly between 0 and 1."""
        with self.assertRaises(ParameterRangeError):
            estimate_coefficient(OracleHandle(label("Z"), seed=1), PauliString((3,)), 0, 0.1)


class WeightEstimateTest(SimpleTestCase):
    def test_point_mass(self):
        """W(Z*) = 1 and W(X*) = 0 for sigma^3 ⊗ sigma^3."""
        oracle = OracleHandle(label("ZZ"), seed=6)
        self.assertEqual(estimate_weight(oracle, IndicatorString(2, (3,)), 0.3, 0.01).value, 1.0)
        zero = estimate_weight(oracle, IndicatorString(2, (1,)), 0.3, 0.01)
        self.assertAlmostEqual(zero.value, 0.0, delta=zero.radius)

    def test_concentration(self):
        """W(X*) = 0.36 is estimated within gamma^2/4 in at least 99% of runs."""
        oracle = OracleHandle(small_coefficient_operator(), seed=23)
        S = IndicatorString(2, (1,))
        estimates = [estimate_weight(oracle, S, 0.3, 0.01) for _ in range(200)]
        misses = sum(abs(e.value - 0.36) > e.radius for e in estimates)
        self.assertAlmostEqual(estimates[0].radius, 0.0225)
        self.assertLessEqual(misses, 2)

    def test_queries_charged(self):
        """Each run of the weight circuit costs four oracle uses."""
        oracle = OracleHandle(label("ZZ"), seed=6)
        estimate = estimate_weight(oracle, IndicatorString(2, (3,)), 0.5, 0.1)
        self.assertEqual(estimate.queries_used, 4 * hoeffding_draws(0.0625, 0.1))
        self.assertEqual(oracle.query_count, estimate.queries_used)

    def test_serializer(self):
        """Weight estimates serialize to plain numbers."""
        oracle = OracleHandle(label("ZZ"), seed=6, exact=True)
        data = WeightEstimateSerializer(
            estimate_weight(oracle, IndicatorString(2, (3,)), 0.5, 0.1)
        ).data
        self.assertEqual(data["value"], 1.0)
        self.assertEqual(data["confidence"], 0.9)
