import numpy as np
from django.test import SimpleTestCase, override_settings

from pauli_core.paulis import PauliString, pauli_matrix
from property_testing.sampling import hastad_test_sample, stabilizer_test_sample
from property_testing.serializers import TestReportSerializer
from qbflab.exceptions import ParameterRangeError
from qbflab.reports import ACCEPT, INCONCLUSIVE, REJECT


def label(text):
    return pauli_matrix(PauliString.from_label(text))


class StabilizerSampleTest(SimpleTestCase):
    def test_point_mass_always_accepts(self):
        """sigma^3 accepts every trial."""
        report = stabilizer_test_sample(label("Z"), 500, seed=1)
        self.assertEqual(report.sampled_acceptance, (500, 500))

    def test_identity_always_accepts(self):
        """The identity accepts every trial."""
        report = stabilizer_test_sample(np.eye(4), 100, seed=2)
        self.assertEqual(report.sampled_acceptance, (100, 100))

    def test_small_coefficient_operator_concentrates(self):
        """10^5 trials land within the confidence radius of 0.5392."""
        f = 0.6 * label("XX") + 0.8 * label("YI")
        report = stabilizer_test_sample(f, 100_000, seed=2024)
        self.assertAlmostEqual(report.exact_probability, 0.5392, places=12)
        self.assertTrue(report.sample_is_consistent())

    def test_seed_is_recorded_and_reproducible(self):
        """The same seed gives the same count regardless of the worker count."""
        f = 0.6 * label("XX") + 0.8 * label("YI")
        with override_settings(QBF_MAX_WORKERS=1):
            serial = stabilizer_test_sample(f, 3000, seed=77)
        with override_settings(QBF_MAX_WORKERS=4):
            pooled = stabilizer_test_sample(f, 3000, seed=77)
        self.assertEqual(serial.sampled_acceptance, pooled.sampled_acceptance)
        self.assertEqual(serial.seed, 77)

    def test_drawn_seed_is_reported(self):
        """Without a seed one is drawn and recorded."""
        report = stabilizer_test_sample(label("X"), 10)
        self.assertIsInstance(report.seed, int)

    def test_verdict_with_epsilon(self):
        """With epsilon the sampled fraction decides the verdict."""
        f = 0.6 * label("XX") + 0.8 * label("YI")
        self.assertEqual(stabilizer_test_sample(f, 1000, seed=3).verdict, INCONCLUSIVE)
        self.assertEqual(stabilizer_test_sample(f, 1000, seed=3, epsilon=0.1).verdict, REJECT)
        self.assertEqual(stabilizer_test_sample(label("Z"), 50, seed=3, epsilon=0.1).verdict, ACCEPT)

    def test_trials_must_be_positive(self):
        """Zero trials are rejected."""
        with self.assertRaises(ParameterRangeError):
            stabilizer_test_sample(label("Z"), 0, seed=1)


class HastadSampleTest(SimpleTestCase):
    def test_dictator(self):
        """A dictator at delta = 0.1 accepts about 90% of trials."""
        report = hastad_test_sample(label("ZI"), 0.1, 20_000, seed=5)
        self.assertAlmostEqual(report.exact_probability, 0.9, places=12)
        self.assertTrue(report.sample_is_consistent())

    def test_no_damping_on_identity(self):
        """The identity always accepts."""
        report = hastad_test_sample(np.eye(2), 0.5, 200, seed=5)
        self.assertEqual(report.sampled_acceptance, (200, 200))


class TestReportSerializerTest(SimpleTestCase):
    def test_serialized_fields(self):
        """Reports serialize with the sampled fraction and the witness label."""
        report = stabilizer_test_sample(label("Z"), 10, seed=4)
        report.witness = PauliString.from_label("Z")
        data = TestReportSerializer(report).data
        self.assertEqual(data["witness"], "Z")
        self.assertEqual(data["sampled_acceptance"], [10, 10])
        self.assertEqual(data["sampled_fraction"], 1.0)
        self.assertEqual(data["seed"], 4)
        self.assertEqual(data["verdict"], INCONCLUSIVE)
