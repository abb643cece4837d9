from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from ..exactlin import IntMatrix
from ..laurent import (
    ONE, T, ZERO, LaurentMatrix, LaurentPoly, arith, associated, content,
    det_laurent, divides, exquo, format_poly, gcd, is_palindromic,
    normalize_unit, pencil, reverse, _det_bareiss, _det_cofactor,
)
from .strategies import laurent_polys, nonzero_laurent_polys


def P(*pairs):
    """P((exp, coeff), ...)"""
    return LaurentPoly(dict(pairs))


class LaurentPolyTests(SimpleTestCase):
    def test_terms_are_canonical(self):
        p = LaurentPoly({3: 1, -1: 0, 0: -2})
        self.assertEqual(p.terms, ((0, -2), (3, 1)))
        self.assertEqual(p, LaurentPoly([(3, 1), (0, -2)]))
        self.assertTrue(LaurentPoly({2: 0}).is_zero)

    def test_ord_deg_and_coefficients(self):
        p = P((-2, -3), (-1, 3))
        self.assertEqual((p.ord, p.deg, p.width), (-2, -1, 1))
        self.assertEqual(p.coefficients(), [-3, 3])
        self.assertEqual(p.leading, 3)
        with self.assertRaises(ValueError):
            ZERO.ord

    def test_arith(self):
        t_minus_1 = T - 1
        self.assertEqual(arith(t_minus_1, T + 1, "mul"), P((2, 1), (0, -1)))
        self.assertEqual(arith(t_minus_1, ZERO, "add"), t_minus_1)
        self.assertEqual(arith(t_minus_1, t_minus_1, "add"), P((1, 2), (0, -2)))
        self.assertEqual(arith(T, T, "sub"), ZERO)
        with self.assertRaises(ValueError):
            arith(T, T, "div")

    def test_mixing_with_other_types(self):
        self.assertEqual(2 * T - 2, P((1, 2), (0, -2)))
        self.assertEqual(1 - T, P((0, 1), (1, -1)))
        with self.assertRaises(TypeError):
            T + 1.5

    def test_units(self):
        u = -T * T
        self.assertTrue(u.is_unit)
        self.assertEqual(u * u.inverse_unit(), ONE)
        self.assertFalse((2 * T).is_unit)
        with self.assertRaises(ArithmeticError):
            (T + 1).inverse_unit()

    @settings(max_examples=200)
    @given(laurent_polys(), laurent_polys(), laurent_polys())
    def test_ring_axioms(self, p, q, r):
        self.assertEqual((p + q) * r, p * r + q * r)
        self.assertEqual(p * q, q * p)
        self.assertEqual(p - p, ZERO)


class NormalizationTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(normalize_unit(P((-1, 3), (-2, -3))), P((1, 3), (0, -3)))
        self.assertEqual(normalize_unit(1 - T), T - 1)
        self.assertEqual(normalize_unit(ZERO), ZERO)

    def test_content(self):
        self.assertEqual(content(2 * T - 2), 2)
        self.assertEqual(content(T * T - T + 1), 1)
        self.assertEqual(content(ZERO), 0)

    def test_reverse_and_palindromes(self):
        self.assertEqual(reverse(T + 2), P((-1, 1), (0, 2)))
        self.assertTrue(is_palindromic(T * T - T + 1))
        self.assertTrue(is_palindromic(2 * T - 2))
        self.assertFalse(is_palindromic(T - 2))

    @settings(max_examples=200)
    @given(nonzero_laurent_polys(), st.integers(-4, 4), st.sampled_from([1, -1]))
    def test_normalization_forgets_units(self, p, k, sign):
        q = normalize_unit(p)
        self.assertEqual(q.ord, 0)
        self.assertGreater(q.leading, 0)
        self.assertEqual(normalize_unit(sign * p.shift(k)), q)
        self.assertTrue(associated(p, sign * p.shift(k)))


class GcdTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(gcd(2 * T - 2, T * T - 1), T - 1)
        p = P((-1, -4), (2, 6))
        self.assertEqual(gcd(p, ZERO), normalize_unit(p))
        self.assertEqual(gcd(ZERO, ZERO), ZERO)
        self.assertEqual(gcd(P((3, 1)), P((-2, -1))), ONE)

    def test_content_is_part_of_the_gcd(self):
        self.assertEqual(gcd(4 * T + 6, 6 * T + 9), 2 * T + 3)
        self.assertEqual(gcd(LaurentPoly.constant(4), LaurentPoly.constant(6)), 2 * ONE)

    def test_divides(self):
        self.assertTrue(divides(T - 1, T * T - 1))
        self.assertFalse(divides(LaurentPoly.constant(2), T - 1))
        self.assertTrue(divides(T + 3, T + 3))
        self.assertTrue(divides(ZERO, ZERO))
        with self.assertRaises(ZeroDivisionError):
            divides(ZERO, T)

    def test_exquo(self):
        self.assertEqual(exquo(P((-1, 1), (1, -1)), T - 1), -P((-1, 1), (0, 1)))
        with self.assertRaises(ArithmeticError):
            exquo(T + 1, 2 * ONE)
        with self.assertRaises(ZeroDivisionError):
            exquo(T, ZERO)

    @settings(max_examples=500)
    @given(laurent_polys(), laurent_polys())
    def test_gcd_divides_both(self, p, q):
        g = gcd(p, q)
        if p.is_zero and q.is_zero:
            self.assertEqual(g, ZERO)
            return
        self.assertTrue(divides(g, p))
        self.assertTrue(divides(g, q))
        self.assertEqual(g, normalize_unit(g))

    @settings(max_examples=500)
    @given(nonzero_laurent_polys(max_terms=3), laurent_polys(max_terms=3),
           laurent_polys(max_terms=3))
    def test_gcd_contains_a_constructed_common_divisor(self, c, p, q):
        g = gcd(c * p, c * q)
        self.assertTrue(divides(normalize_unit(c), g))
        if not (p.is_zero and q.is_zero):
            self.assertTrue(divides(g, c * p) and divides(g, c * q))


class FormatTests(SimpleTestCase):
    def test_fixed_form(self):
        self.assertEqual(format_poly(2 * T - 2), "2*t - 2")
        self.assertEqual(format_poly(T * T - T + 1), "t^2 - t + 1")
        self.assertEqual(format_poly(-T), "-t")
        self.assertEqual(format_poly(P((-2, 3), (0, 1))), "1 + 3*t^-2")
        self.assertEqual(format_poly(ZERO), "0")
        self.assertEqual(str(2 * T * T - 3 * T + 2), "2*t^2 - 3*t + 2")


class DeterminantTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(det_laurent(LaurentMatrix.from_rows([[2 * T - 2]])), 2 * T - 2)
        self.assertEqual(det_laurent(LaurentMatrix.identity(3)), ONE)
        trefoil = LaurentMatrix.from_rows([[1 - T, T], [-ONE, 1 - T]])
        self.assertEqual(det_laurent(trefoil), T * T - T + 1)

    def test_non_square(self):
        with self.assertRaises(ValueError):
            det_laurent(LaurentMatrix.from_rows([[T, ONE]]))

    def test_pencil(self):
        G = IntMatrix.from_rows([[1, 0], [1, 1]])
        F = IntMatrix.from_rows([[1, 1], [0, 1]])
        self.assertEqual(
            pencil(G, F).to_rows(),
            [[T - 1, -ONE], [T, T - 1]],
        )
        self.assertEqual(det_laurent(pencil(G, F)), T * T - T + 1)

    @settings(max_examples=60)
    @given(st.integers(5, 6).flatmap(lambda n: st.lists(
        st.lists(laurent_polys(max_terms=2, low=-2, high=2), min_size=n, max_size=n),
        min_size=n, max_size=n,
    )))
    def test_elimination_agrees_with_cofactors(self, rows):
        self.assertEqual(_det_bareiss(rows), _det_cofactor(rows))
