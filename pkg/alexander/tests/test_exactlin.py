from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from ..exactlin import (
    INFINITE_INDEX, IntMatrix, block_diagonal, det, kernel_basis,
    lattice_index, lattice_membership, rank, row_basis, snf, unimodular_inverse,
)
from .strategies import int_matrices, square_matrices


def M(rows, cols=None):
    return IntMatrix.from_rows(rows, cols)


class IntMatrixTests(SimpleTestCase):
    def test_shape_is_validated(self):
        with self.assertRaises(ValueError):
            IntMatrix(2, 2, (1, 2, 3))
        with self.assertRaises(ValueError):
            M([[1, 2], [3]])

    def test_transpose_and_product(self):
        A = M([[1, 2, 3], [4, 5, 6]])
        self.assertEqual(A.T, M([[1, 4], [2, 5], [3, 6]]))
        self.assertEqual(A @ A.T, M([[14, 32], [32, 77]]))
        self.assertEqual(A.apply((1, 0, -1)), (-2, -2))

    def test_empty_matrices_compose(self):
        A = IntMatrix.zeros(0, 3)
        B = IntMatrix.zeros(3, 0)
        self.assertEqual(A @ B, IntMatrix.zeros(0, 0))
        self.assertEqual(B @ A, IntMatrix.zeros(3, 3))

    def test_block_diagonal(self):
        self.assertEqual(
            block_diagonal(M([[2]]), M([[3, 1]])),
            M([[2, 0, 0], [0, 3, 1]]),
        )


class SmithFormTests(SimpleTestCase):
    def test_zero_matrix(self):
        res = snf(M([[0]]))
        self.assertEqual(res.invariant_factors, ())
        self.assertEqual(res.free_rank, 1)
        self.assertTrue(res.diag.is_zero())

    def test_identity(self):
        res = snf(IntMatrix.identity(3))
        self.assertEqual(res.diag, IntMatrix.identity(3))
        self.assertEqual(res.invariant_factors, (1, 1, 1))
        self.assertEqual(res.free_rank, 0)

    def test_coprime_diagonal_becomes_one_and_six(self):
        res = snf(M([[2, 0], [0, 3]]))
        self.assertEqual(res.invariant_factors, (1, 6))
        self.assertEqual(res.diag, M([[1, 0], [0, 6]]))

    def test_empty_rows(self):
        res = snf(IntMatrix.zeros(0, 2))
        self.assertEqual(res.free_rank, 2)
        self.assertEqual(res.right, IntMatrix.identity(2))

    @settings(max_examples=500)
    @given(int_matrices())
    def test_witness_and_divisibility_chain(self, A):
        res = snf(A)
        self.assertEqual(res.left @ A @ res.right, res.diag)
        self.assertEqual(abs(det(res.left)), 1)
        self.assertEqual(abs(det(res.right)), 1)
        for i in range(res.diag.rows):
            for j in range(res.diag.cols):
                if i != j:
                    self.assertEqual(res.diag[i, j], 0)
        factors = res.invariant_factors
        self.assertTrue(all(d > 0 for d in factors))
        for a, b in zip(factors, factors[1:]):
            self.assertEqual(b % a, 0)
        self.assertEqual(len(factors), rank(A))
        self.assertEqual(res.free_rank, A.cols - rank(A))


class DeterminantTests(SimpleTestCase):
    def test_small_cases(self):
        self.assertEqual(det(IntMatrix.identity(4)), 1)
        self.assertEqual(det(M([[2, 0], [0, 3]])), 6)
        self.assertEqual(det(M([[1, 1], [0, 1]])), 1)
        self.assertEqual(det(IntMatrix.zeros(0, 0)), 1)

    def test_zero_pivot_needs_a_swap(self):
        self.assertEqual(det(M([[0, 1], [1, 0]])), -1)
        self.assertEqual(det(M([[0, 2, 1], [1, 0, 0], [0, 1, 1]])), -1)

    def test_non_square(self):
        with self.assertRaises(ValueError):
            det(M([[1, 2]]))

    @settings(max_examples=200)
    @given(st.integers(1, 4).flatmap(lambda d: square_matrices(d, -9, 9)))
    def test_det_matches_smith_form(self, A):
        res = snf(A)
        expected = 0
        if len(res.invariant_factors) == A.rows:
            expected = 1
            for d in res.invariant_factors:
                expected *= d
        self.assertEqual(abs(det(A)), expected)


class LatticeTests(SimpleTestCase):
    def test_kernel_examples(self):
        self.assertEqual(kernel_basis(M([[2, -2]])), M([[1, 1]]))
        self.assertEqual(kernel_basis(IntMatrix.identity(2)).rows, 0)
        self.assertEqual(kernel_basis(M([[2]])).rows, 0)

    @settings(max_examples=200)
    @given(int_matrices(max_rows=4, max_cols=5))
    def test_kernel_is_annihilated_and_full(self, A):
        K = kernel_basis(A)
        for i in range(K.rows):
            self.assertFalse(any(A.apply(K.row(i))))
        self.assertEqual(K.rows, A.cols - rank(A))

    def test_membership_examples(self):
        L = M([[2, 0], [0, 2]])
        self.assertEqual(lattice_membership(L, (4, 2)), (2, 1))
        self.assertIsNone(lattice_membership(L, (1, 0)))
        self.assertEqual(lattice_membership(M([[-2, 2]]), (2, -2)), (-1,))

    def test_membership_in_the_zero_lattice(self):
        L = IntMatrix.zeros(0, 2)
        self.assertEqual(lattice_membership(L, (0, 0)), ())
        self.assertIsNone(lattice_membership(L, (0, 1)))

    @settings(max_examples=200)
    @given(int_matrices(max_rows=4, max_cols=4, min_rows=1, min_cols=1))
    def test_membership_finds_combinations(self, L):
        v = tuple(sum(k * x for k, x in zip(range(1, L.rows + 1), L.col(j)))
                  for j in range(L.cols))
        coeffs = lattice_membership(L, v)
        self.assertIsNotNone(coeffs)
        self.assertEqual(M([coeffs], L.rows) @ L, M([v], L.cols))

    def test_row_basis_drops_dependent_rows(self):
        B = row_basis(M([[2, 4], [1, 2], [3, 6]]))
        self.assertEqual(B, M([[1, 2]]))

    def test_index(self):
        self.assertEqual(lattice_index(M([[2]])), 2)
        self.assertEqual(lattice_index(IntMatrix.identity(3)), 1)
        self.assertEqual(lattice_index(M([[2, 0], [0, 3]])), 6)
        self.assertEqual(lattice_index(M([[1, 2], [2, 4]])), INFINITE_INDEX)

    def test_unimodular_inverse(self):
        U = M([[2, 1], [1, 1]])
        self.assertEqual(U @ unimodular_inverse(U), IntMatrix.identity(2))
        with self.assertRaises(ValueError):
            unimodular_inverse(M([[2, 0], [0, 1]]))
