import numpy as np
from django.test import SimpleTestCase

from pauli_core.operators import DenseOperator
from pauli_core.paulis import PauliString, pauli_matrix
from qbflab.exceptions import InputFormatError, MalformedOperatorError, NotHermitianError


class PauliStringTest(SimpleTestCase):
    def test_label_round_trip(self):
        """Labels map to words with qubit 1 first."""
        s = PauliString.from_label("XZI")
        self.assertEqual(s.word, (1, 3, 0))
        self.assertEqual(s.label, "XZI")
        self.assertEqual(str(s), "XZI")

    def test_support_and_weight(self):
        """Support is 1-based and the weight counts non-identity symbols."""
        s = PauliString((0, 2, 0, 3))
        self.assertEqual(s.support, frozenset({2, 4}))
        self.assertEqual(s.weight, 2)

    def test_flat_index_is_big_endian(self):
        """The first symbol is the most significant base-4 digit."""
        self.assertEqual(PauliString((1, 0)).index, 4)
        self.assertEqual(PauliString.from_index(4, 2), PauliString((1, 0)))

    def test_invalid_symbols(self):
        """Symbols outside 0..3 and unknown letters are rejected."""
        with self.assertRaises(InputFormatError):
            PauliString((0, 4))
        with self.assertRaises(InputFormatError):
            PauliString.from_label("XQ")

    def test_anticommutation_rule(self):
        """An odd number of clashing positions means anticommuting."""
        self.assertTrue(PauliString.from_label("XI").anticommutes_with(PauliString.from_label("YZ")))
        self.assertFalse(PauliString.from_label("XX").anticommutes_with(PauliString.from_label("YY")))
        self.assertFalse(PauliString.from_label("XI").anticommutes_with(PauliString.from_label("XZ")))


class PauliMatrixTest(SimpleTestCase):
    def test_sigma_three(self):
        """sigma^3 is diag(1, -1)."""
        self.assertTrue(pauli_matrix(PauliString((3,))).allclose(np.diag([1, -1])))

    def test_identity(self):
        """The all-zero word is the identity."""
        self.assertTrue(pauli_matrix(PauliString((0, 0))).allclose(np.eye(4)))

    def test_tensor_order(self):
        """Qubit 1 is the most significant factor."""
        x = np.array([[0, 1], [1, 0]])
        z = np.diag([1, -1])
        self.assertTrue(pauli_matrix(PauliString((1, 3))).allclose(np.kron(x, z)))

    def test_unitary_hermitian_involution(self):
        """Every Pauli string is unitary, Hermitian and squares to the identity."""
        for index in range(16):
            m = pauli_matrix(PauliString.from_index(index, 2)).matrix
            self.assertTrue(np.allclose(m, m.conj().T))
            self.assertTrue(np.allclose(m @ m, np.eye(4)))


class DenseOperatorTest(SimpleTestCase):
    def test_hermitian_flag_detected(self):
        """The flag is computed when not given."""
        self.assertTrue(DenseOperator(np.diag([1, -1])).hermitian)
        self.assertFalse(DenseOperator(np.array([[0, 1], [0, 0]])).hermitian)

    def test_false_hermitian_claim(self):
        """Claiming Hermiticity for a non-Hermitian matrix fails."""
        with self.assertRaises(NotHermitianError):
            DenseOperator(np.array([[0, 1], [0, 0]]), hermitian=True)

    def test_non_power_of_two(self):
        """Dimensions must be powers of two."""
        with self.assertRaises(MalformedOperatorError):
            DenseOperator(np.eye(6))

    def test_matrix_is_read_only(self):
        """Operators are immutable values."""
        op = DenseOperator.identity(1)
        with self.assertRaises(ValueError):
            op.matrix[0, 0] = 2

    def test_arithmetic(self):
        """Scalars and operators combine into new operators."""
        x = pauli_matrix(PauliString((1,)))
        combined = np.float64(0.5) * x + x * 0.5
        self.assertTrue(combined.allclose(x))
        self.assertEqual(combined.n, 1)
