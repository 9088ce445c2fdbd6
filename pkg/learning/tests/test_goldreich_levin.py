from unittest.mock import patch

import numpy as np
from django.test import SimpleTestCase

from learning.estimation import WeightEstimate
from learning.goldreich_levin import goldreich_levin
from learning.oracle import OracleHandle
from learning.serializers import GoldreichLevinResultSerializer
from pauli_core.paulis import PauliString, pauli_matrix
from qbf_build.generators import random_planted_spectrum, random_quantum_boolean


def label(text):
    return pauli_matrix(PauliString.from_label(text))


class GoldreichLevinTest(SimpleTestCase):
    def test_stabilizer(self):
        """sigma^1 ⊗ sigma^2 ⊗ sigma^3 yields exactly XYZ."""
        result = goldreich_levin(OracleHandle(label("XYZ"), seed=1), 0.5, 0.05)
        self.assertEqual(result.strings, {PauliString((1, 2, 3))})
        (_, estimate), = result.candidates
        self.assertAlmostEqual(estimate, 1.0)

    def test_small_coefficient_operator(self):
        """Both coefficients of 0.6 XX + 0.8 YI are found in at least 95% of runs."""
        f = 0.6 * label("XX") + 0.8 * label("YI")
        expected = {PauliString.from_label("XX"), PauliString.from_label("YI")}
        hits = sum(
            goldreich_levin(OracleHandle(f, seed=seed), 0.5, 0.05).strings == expected
            for seed in range(40)
        )
        self.assertGreaterEqual(hits, 38)

    def test_bounds_hold(self):
        """List size stays within 4/gamma^2 and estimations within 16n/gamma^2."""
        f = random_quantum_boolean(3, 4)
        for seed in range(5):
            result = goldreich_levin(OracleHandle(f, seed=seed), 0.4, 0.1)
            self.assertTrue(result.list_bound_respected)
            self.assertLessEqual(result.weight_estimations, result.estimation_bound)

    def test_exact_mode_matches_brute_force(self):
        """Without sampling noise the output is {s : |f̂_s|^2 >= gamma^2 / 2}."""
        gamma = 0.3
        for seed in range(5):
            f = random_quantum_boolean(3, 100 + seed)
            oracle = OracleHandle(f, seed=seed, exact=True)
            result = goldreich_levin(oracle, gamma, 0.1)
            weights = np.abs(oracle.coefficients) ** 2
            expected = {
                PauliString(tuple(int(d) for d in index))
                for index in np.argwhere(weights >= gamma**2 / 2)
            }
            self.assertEqual(result.strings, expected)
            for s, estimate in result.candidates:
                self.assertAlmostEqual(estimate, oracle.coefficient(s).real, places=10)

    def test_planted_spectra(self):
        """Misses of |f̂_s| >= gamma and listings below gamma/2 each stay under 5% of runs."""
        gamma, runs = 0.3, 100
        misses = spurious = 0
        rng = np.random.default_rng(2718)
        for _ in range(runs):
            f, planted = random_planted_spectrum(4, [0.7, 0.5, 0.4], rng)
            oracle = OracleHandle(f, seed=int(rng.integers(2**32)))
            found = goldreich_levin(oracle, gamma, 0.05).strings
            heavy = {s for s, c in planted.items() if abs(c) >= gamma}
            misses += not heavy <= found
            spurious += any(abs(oracle.coefficient(s)) < gamma / 2 for s in found)
        self.assertLessEqual(misses, 5)
        self.assertLessEqual(spurious, 5)

    def test_query_count_reported(self):
        """The result reports the queries spent during the run."""
        oracle = OracleHandle(label("ZZ"), seed=3)
        oracle.charge(7)
        result = goldreich_levin(oracle, 0.5, 0.1)
        self.assertEqual(result.queries, oracle.query_count - 7)

    def test_serializer(self):
        """Candidates serialize as label and estimate."""
        result = goldreich_levin(OracleHandle(label("ZX"), seed=2, exact=True), 0.5, 0.1)
        data = GoldreichLevinResultSerializer(result).data
        self.assertEqual(data["candidates"], [{"string": "ZX", "estimate": 1.0}])
        self.assertTrue(data["list_bound_respected"])
        self.assertTrue(data["exact"])


class ListBoundTest(SimpleTestCase):
    def setUp(self):
        heavy = WeightEstimate(value=1.0, radius=0.0, confidence=1.0, queries_used=0)
        patcher = patch("learning.goldreich_levin.estimate_weight", return_value=heavy)
        patcher.start()
        self.addCleanup(patcher.stop)

    def test_exact_mode_raises(self):
        """With exact weights a list above 4/gamma^2 can only be a bug."""
        with self.assertRaises(AssertionError):
            goldreich_levin(OracleHandle(label("XY"), exact=True), 0.9, 0.1)

    def test_sampled_mode_warns(self):
        """Sampled weights may overshoot the bound; the run continues and records it."""
        with self.assertLogs("learning.goldreich_levin", level="WARNING"):
            result = goldreich_levin(OracleHandle(label("XY"), seed=2), 0.9, 0.1)
        self.assertFalse(result.list_bound_respected)
        self.assertEqual(len(result.candidates), 16)
