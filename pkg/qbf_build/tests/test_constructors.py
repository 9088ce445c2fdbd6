import numpy as np
from django.test import SimpleTestCase

from pauli_core.norms import is_quantum_boolean
from pauli_core.paulis import PauliString, pauli_matrix
from qbf_build.constructors import (
    anticommuting_combination,
    conjugate,
    local_qbf,
    projector_qbf,
    sign_function,
)
from qbf_build.generators import random_unitary
from qbflab.exceptions import (
    AnticommutationError,
    NormalizationError,
    NotHermitianError,
    NotProjectorError,
    NotQuantumBooleanError,
)


def label(text):
    return pauli_matrix(PauliString.from_label(text))


class ProjectorTest(SimpleTestCase):
    def test_zero_projector(self):
        """P = 0 gives the identity."""
        self.assertTrue(projector_qbf(np.zeros((2, 2))).allclose(np.eye(2)))

    def test_ground_state_projector(self):
        """P = diag(1, 0) gives sigma^3."""
        self.assertTrue(projector_qbf(np.diag([1.0, 0.0])).allclose(label("Z")))

    def test_uniform_superposition(self):
        """I - 2|psi><psi| has a single -1 eigenvalue."""
        psi = np.full(4, 0.5)
        f = projector_qbf(np.outer(psi, psi))
        eigenvalues = np.linalg.eigvalsh(f.matrix)
        self.assertEqual(int(np.sum(eigenvalues < 0)), 1)
        self.assertTrue(is_quantum_boolean(f))

    def test_rejects_non_projector(self):
        """2 * diag(1, 0) is Hermitian but not idempotent."""
        with self.assertRaises(NotProjectorError):
            projector_qbf(np.diag([2.0, 0.0]))


class AnticommutingCombinationTest(SimpleTestCase):
    def test_small_coefficient_operator(self):
        """0.6 XX + 0.8 YI is quantum boolean."""
        f = anticommuting_combination([0.6, 0.8], [label("XX"), label("YI")])
        self.assertTrue(f.allclose(0.6 * label("XX") + 0.8 * label("YI")))
        self.assertTrue(is_quantum_boolean(f))

    def test_single_term(self):
        """alpha = (1) returns the operator itself."""
        self.assertTrue(anticommuting_combination([1.0], [label("Z")]).allclose(label("Z")))

    def test_commuting_pair_reports_offender(self):
        """sigma^1 with itself fails with the pair (1, 2)."""
        root = 1 / np.sqrt(2)
        with self.assertRaises(AnticommutationError) as ctx:
            anticommuting_combination([root, root], [label("X"), label("X")])
        self.assertEqual(ctx.exception.pair, (1, 2))

    def test_normalization(self):
        """Coefficients whose squares do not sum to one are rejected."""
        with self.assertRaises(NormalizationError):
            anticommuting_combination([0.5, 0.5], [label("X"), label("Z")])

    def test_members_must_be_quantum_boolean(self):
        """A non-unitary member is named in the error."""
        with self.assertRaises(NotQuantumBooleanError):
            anticommuting_combination([1.0], [2 * label("Z")])


class SignFunctionTest(SimpleTestCase):
    def test_diagonal(self):
        """diag(2, -3) maps to sigma^3."""
        self.assertTrue(sign_function(np.diag([2.0, -3.0])).allclose(label("Z")))

    def test_zero_maps_to_minus_identity(self):
        """sgn(0) = -1."""
        self.assertTrue(sign_function(np.zeros((4, 4))).allclose(-np.eye(4)))

    def test_scaled_pauli(self):
        """0.3 sigma^1 maps to sigma^1."""
        self.assertTrue(sign_function(0.3 * label("X")).allclose(label("X")))

    def test_rejects_non_hermitian(self):
        """Nilpotent input is not Hermitian."""
        with self.assertRaises(NotHermitianError):
            sign_function(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_random_hermitian_output_is_quantum_boolean(self):
        """sgn(h) passes the quantum boolean predicate for random h."""
        rng = np.random.default_rng(2)
        for _ in range(5):
            a = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
            self.assertTrue(is_quantum_boolean(sign_function(a + a.conj().T)))


class ConjugateAndLocalTest(SimpleTestCase):
    def test_conjugate_preserves_booleanity(self):
        """U† f U is quantum boolean for Haar-random U."""
        u = random_unitary(2, 17)
        self.assertTrue(is_quantum_boolean(conjugate(label("ZX"), u)))

    def test_local_product(self):
        """Single-qubit factors are tensored with qubit 1 first."""
        self.assertTrue(local_qbf([label("X"), label("Z")]).allclose(label("XZ")))
