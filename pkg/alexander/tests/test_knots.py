from django.test import SimpleTestCase

from ..exactlin import IntMatrix
from ..knots import (
    SeifertMatrix, analyze_knot, seifert_amalgam, seifert_to_presentation,
)
from ..decomp import presentation_from_amalgam, reduce
from ..laurent import ONE, T
from ..present import order

TREFOIL = SeifertMatrix.from_rows([[-1, 1], [0, -1]])
FIGURE_EIGHT = SeifertMatrix.from_rows([[1, 1], [0, -1]])
KNOT_5_2 = SeifertMatrix.from_rows([[1, 1], [0, 2]])
UNKNOT = SeifertMatrix.from_rows([[0, 1], [0, 0]])


class SeifertMatrixTests(SimpleTestCase):
    def test_shape(self):
        with self.assertRaises(ValueError):
            SeifertMatrix(IntMatrix.identity(3))
        with self.assertRaises(ValueError):
            SeifertMatrix(IntMatrix.from_rows([[1, 2]]))
        self.assertEqual(KNOT_5_2.genus, 1)
        self.assertEqual(SeifertMatrix.from_rows([]).genus, 0)

    def test_pairing(self):
        for S in (TREFOIL, FIGURE_EIGHT, KNOT_5_2, UNKNOT):
            self.assertEqual(abs(S.pairing_determinant()), 1)
        self.assertEqual(SeifertMatrix(IntMatrix.identity(2)).pairing_determinant(), 0)

    def test_presentation_matches_the_amalgam(self):
        P = seifert_to_presentation(TREFOIL)
        self.assertEqual(P.matrix.to_rows(), [[1 - T, T], [-ONE, 1 - T]])
        self.assertEqual(presentation_from_amalgam(seifert_amalgam(TREFOIL)).matrix, P.matrix)


class AnalyzeKnotTests(SimpleTestCase):
    def test_alexander_polynomials(self):
        cases = [
            (TREFOIL, T * T - T + 1, True),
            (FIGURE_EIGHT, T * T - 3 * T + 1, True),
            (KNOT_5_2, 2 * T * T - 3 * T + 2, False),
            (UNKNOT, ONE, True),
        ]
        for S, delta, monic in cases:
            with self.subTest(delta=str(delta)):
                report = analyze_knot(S)
                self.assertEqual(report.alexander, delta)
                self.assertIs(report.monic, monic)
                self.assertTrue(report.palindromic)
                self.assertEqual(report.content, 1)
                self.assertTrue(report.pairing_unimodular)
                self.assertIsNone(report.decomposition)

    def test_genus_zero(self):
        report = analyze_knot(SeifertMatrix.from_rows([]))
        self.assertEqual(report.alexander, ONE)
        self.assertEqual(report.genus, 0)
        self.assertTrue(report.monic)

    def test_bad_pairing_warns(self):
        with self.assertLogs("alexander.knots", "WARNING") as logs:
            report = analyze_knot(SeifertMatrix(IntMatrix.identity(2)))
        self.assertIn("det(V - V^T) = 0", logs.output[0])
        self.assertFalse(report.pairing_unimodular)
        self.assertEqual(report.alexander, T * T - 2 * T + 1)

    def test_with_decomposition(self):
        report = analyze_knot(TREFOIL, with_decomposition=True, seed=1)
        self.assertEqual(report.decomposition.delta, T * T - T + 1)
        self.assertTrue(report.decomposition.passed)
        self.assertEqual(report.decomposition.self_checks, {"scramble_invariant": True})
        self.assertEqual(report.seifert_reduction.steps, 0)
        self.assertEqual(report.seifert_reduction.b_form, (2, ()))

    def test_unknot_surface_collapses(self):
        report = analyze_knot(UNKNOT, with_decomposition=True)
        self.assertEqual(report.seifert_reduction.steps, 1)
        self.assertEqual(report.seifert_reduction.b_form, (0, ()))
        self.assertEqual(report.seifert_reduction.u_form, (0, ()))

    def test_stabilized_unknot(self):
        A = reduce(seifert_amalgam(SeifertMatrix.from_rows([[0, 1], [0, 3]])))
        self.assertTrue(A.B.is_trivial())
        self.assertEqual(order(presentation_from_amalgam(A)), ONE)
