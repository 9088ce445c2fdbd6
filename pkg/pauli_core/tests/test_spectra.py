from django.test import SimpleTestCase

from pauli_core.spectra import Spectrum, commutation_class, spectrum_stats


class SpectrumStatsTest(SimpleTestCase):
    def test_dictator(self):
        """{Z: 1} has degree 1, support {1} and all weight on level 1."""
        stats = spectrum_stats(Spectrum(1, {"Z": 1.0}))
        self.assertEqual(stats.degree, 1)
        self.assertEqual(stats.support, frozenset({1}))
        self.assertEqual(stats.weight_per_level, (0.0, 1.0))

    def test_smallcoeff(self):
        """Levels carry 0.64 and 0.36 for the small-coefficient operator."""
        stats = spectrum_stats(Spectrum(2, {"XX": 0.6, "YI": 0.8}))
        self.assertEqual(stats.degree, 2)
        self.assertEqual(len(stats.weight_per_level), 3)
        self.assertAlmostEqual(stats.weight_per_level[1], 0.64)
        self.assertAlmostEqual(stats.weight_per_level[2], 0.36)

    def test_majority(self):
        """MAJ3 weights are [0, 3/4, 0, 1/4]."""
        spec = Spectrum(3, {"ZII": 0.5, "IZI": 0.5, "IIZ": 0.5, "ZZZ": -0.5})
        stats = spectrum_stats(spec)
        self.assertEqual(stats.degree, 3)
        for got, expected in zip(stats.weight_per_level, [0, 0.75, 0, 0.25]):
            self.assertAlmostEqual(got, expected)

    def test_level_projection(self):
        """Projecting on a level keeps only strings of that weight."""
        spec = Spectrum(3, {"ZII": 0.5, "IZI": 0.5, "IIZ": 0.5, "ZZZ": -0.5})
        top = spectrum_stats(spec).level_projection(3)
        self.assertEqual([key.label for key in top], ["ZZZ"])
        self.assertEqual(len(spectrum_stats(spec).level_projection(2)), 0)


class SpectrumTest(SimpleTestCase):
    def test_sparsity_threshold(self):
        """Coefficients at or below 1e-12 are dropped."""
        spec = Spectrum(1, {"X": 1e-13, "Z": 0.5})
        self.assertNotIn("X", spec)
        self.assertEqual(spec["X"], 0.0)

    def test_keys_sorted_by_index(self):
        """Iteration order follows the flat Pauli index."""
        spec = Spectrum(2, {"ZZ": 1, "XI": 1, "IY": 1})
        self.assertEqual([key.label for key in spec], ["IY", "XI", "ZZ"])

    def test_commutation_class(self):
        """Retained terms are classified as commuting, anticommuting or mixed."""
        self.assertEqual(commutation_class(Spectrum(2, {"XI": 0.6, "YZ": 0.8})), "anticommuting")
        self.assertEqual(commutation_class(Spectrum(2, {"ZI": 0.5, "IZ": 0.5})), "commuting")
        self.assertEqual(
            commutation_class(Spectrum(2, {"ZI": 0.5, "IZ": 0.5, "XI": 0.1})), "mixed"
        )
        self.assertEqual(commutation_class(Spectrum(1, {"Z": 1})), "single")
