import numpy as np
from django.test import SimpleTestCase

from pauli_core.fourier import fourier_transform
from pauli_core.norms import is_quantum_boolean, is_unitary
from pauli_core.spectra import commutation_class, spectrum_stats
from qbf_build import generators
from qbflab.exceptions import ParameterRangeError


class GeneratorTest(SimpleTestCase):
    def test_seeded_generators_are_reproducible(self):
        """The same seed gives the same operator."""
        a = generators.random_quantum_boolean(3, 42)
        b = generators.random_quantum_boolean(3, 42)
        self.assertTrue(a.allclose(b, atol=0))

    def test_random_quantum_boolean(self):
        """Random quantum boolean functions pass the predicate; traceless ones have zero trace."""
        rng = np.random.default_rng(1)
        self.assertTrue(is_quantum_boolean(generators.random_quantum_boolean(3, rng)))
        balanced = generators.random_quantum_boolean(3, rng, traceless=True)
        self.assertAlmostEqual(abs(balanced.trace()), 0, places=9)

    def test_random_unitary(self):
        """Haar samples are unitary."""
        self.assertTrue(is_unitary(generators.random_unitary(3, 0)))

    def test_local_qbf_is_boolean(self):
        """Products of single-qubit booleans are boolean."""
        self.assertTrue(is_quantum_boolean(generators.random_local_qbf(3, 7)))

    def test_degree_operator(self):
        """Generated degree-d operators have degree at most d."""
        f = generators.random_degree_operator(4, 2, 3)
        self.assertLessEqual(spectrum_stats(fourier_transform(f)).degree, 2)
        with self.assertRaises(ParameterRangeError):
            generators.random_degree_operator(2, 3, 0)

    def test_anticommuting_family(self):
        """The family has 2n + 1 pairwise anticommuting strings."""
        family = generators.anticommuting_family(4, 12)
        self.assertEqual(len(family), 9)
        self.assertEqual(len(set(family)), 9)
        for i, a in enumerate(family):
            for b in family[i + 1 :]:
                self.assertTrue(a.anticommutes_with(b))

    def test_random_anticommuting_qbf(self):
        """Normalized anticommuting combinations are boolean with an anticommuting spectrum."""
        f, chosen = generators.random_anticommuting_qbf(3, 4, 5)
        self.assertEqual(len(chosen), 4)
        self.assertTrue(is_quantum_boolean(f))
        self.assertEqual(commutation_class(fourier_transform(f)), "anticommuting")

    def test_planted_spectrum(self):
        """Planted magnitudes appear in the spectrum and the result is boolean."""
        f, planted = generators.random_planted_spectrum(4, [0.7, 0.5, 0.4], 21)
        self.assertTrue(is_quantum_boolean(f))
        spec = fourier_transform(f)
        magnitudes = sorted((abs(v) for v in planted.values()), reverse=True)
        self.assertAlmostEqual(magnitudes[0], 0.7)
        for key, value in planted.items():
            self.assertAlmostEqual(spec[key], value, places=10)

    def test_planted_spectrum_overweight(self):
        """Magnitudes with squared sum above one are rejected."""
        with self.assertRaises(ParameterRangeError):
            generators.random_planted_spectrum(2, [0.9, 0.9])
