import numpy as np
from django.test import SimpleTestCase

from noise_hyper.noise import apply_noise, depolarize, is_completely_positive, noisy_operator
from pauli_core.fourier import fourier_transform
from pauli_core.norms import inner_product, schatten_norm
from pauli_core.operators import DenseOperator
from pauli_core.paulis import PauliString, pauli_matrix
from pauli_core.spectra import Spectrum
from qbf_build.generators import random_hermitian
from qbflab.exceptions import ParameterRangeError


def label(text):
    return pauli_matrix(PauliString.from_label(text))


class ApplyNoiseTest(SimpleTestCase):
    def setUp(self):
        self.rng = np.random.default_rng(31)

    def test_single_coefficient(self):
        """T_1/2 halves a weight-one coefficient."""
        noisy = apply_noise(Spectrum(1, {PauliString((3,)): 1.0}), 0.5)
        self.assertAlmostEqual(noisy[PauliString((3,))], 0.5)

    def test_identity_fixed(self):
        """The identity coefficient survives any noise rate."""
        identity = Spectrum(2, {PauliString.identity(2): 1.0})
        for epsilon in (-1.0, -0.5, 0.0, 0.3, 1.0):
            self.assertEqual(apply_noise(identity, epsilon)[PauliString.identity(2)], 1.0)

    def test_semigroup(self):
        """T_0.5 T_0.5 = T_0.25 coefficientwise."""
        spec = fourier_transform(random_hermitian(3, self.rng))
        twice = apply_noise(apply_noise(spec, 0.5), 0.5)
        self.assertTrue(twice.allclose(apply_noise(spec, 0.25), atol=1e-14))

    def test_range(self):
        """Rates outside [-1, 1] are rejected."""
        with self.assertRaises(ParameterRangeError):
            apply_noise(Spectrum(1, {}), 1.5)

    def test_contraction(self):
        """||T_eps f||_p <= ||f||_p for 0 <= eps <= 1."""
        for _ in range(20):
            f = random_hermitian(3, self.rng)
            for epsilon in (0.0, 0.2, 0.7, 1.0):
                for p in (1, 2, 3, np.inf):
                    self.assertLessEqual(
                        schatten_norm(noisy_operator(f, epsilon), p), schatten_norm(f, p) + 1e-12
                    )

    def test_self_adjoint(self):
        """<T_eps f, g> = <f, T_eps g>."""
        for epsilon in (-0.8, 0.1, 0.6):
            f, g = random_hermitian(2, self.rng), random_hermitian(2, self.rng)
            left = inner_product(noisy_operator(f, epsilon), g)
            right = inner_product(f, noisy_operator(g, epsilon))
            self.assertAlmostEqual(abs(left - right), 0.0, places=12)


class DepolarizeTest(SimpleTestCase):
    def test_full_depolarization(self):
        """D_0(f) = (tr f / 2^n) I."""
        f = random_hermitian(2, 4)
        expected = DenseOperator.identity(2) * (f.trace() / 4)
        self.assertTrue(depolarize(f, 0.0).allclose(expected, atol=1e-12))

    def test_identity_channel(self):
        """D_1 leaves f unchanged."""
        f = random_hermitian(3, 5)
        self.assertTrue(depolarize(f, 1.0).allclose(f, atol=1e-12))

    def test_pauli_scaled(self):
        """D_0.5(sigma^1) = 0.5 sigma^1."""
        self.assertTrue(depolarize(label("X"), 0.5).allclose(0.5 * label("X")))

    def test_matches_fourier_multiplier(self):
        """The channel agrees with T_eps over a grid of completely positive rates."""
        rng = np.random.default_rng(77)
        for epsilon in np.linspace(-1 / 3, 1, 9):
            f = random_hermitian(3, rng)
            self.assertTrue(depolarize(f, epsilon).allclose(noisy_operator(f, epsilon), atol=1e-12))

    def test_refuses_non_physical_rate(self):
        """Rates below -1/3 are not a channel."""
        self.assertFalse(is_completely_positive(-0.5))
        with self.assertRaises(ParameterRangeError):
            depolarize(label("Z"), -0.5)
        noisy_operator(label("Z"), -0.5)
