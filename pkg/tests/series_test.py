import unittest
from fractions import Fraction
from math import factorial as math_factorial

import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import SeriesError
from series.lambda_series import LambdaSeries, lambda_series
from series.operators import (
    central_difference_symbol,
    real_derivative_power,
    series_add,
    series_invert,
    series_mul,
    series_neg,
    series_scale,
    theta_q,
    theta_q_inverse,
    theta_q_rat,
)
from series.q_series import QSeries, q_series
from series.rat_func import Q, RatFunc

TRUNC = 6

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
coefficient_lists = st.lists(rationals, min_size=TRUNC + 1, max_size=TRUNC + 1)
q_coefficients = st.dictionaries(st.integers(min_value=0, max_value=5), rationals, max_size=6)


def series_from(coeffs, min_exp=0):
    return LambdaSeries(min_exp, coeffs)


class TestLambdaSeries(unittest.TestCase):
    """Truncated Laurent series in lambda"""

    def test_pole_times_monomial(self):
        """(lambda^-2)(lambda^2) = 1"""
        product = lambda_series([(-2, 1)], 4) * lambda_series([(2, 1)], 4)
        self.assertEqual(product[0], 1)
        self.assertEqual(product.max_exp, 2)
        self.assertTrue(product == 1)

    def test_precision_of_product(self):
        """A product is known through min(M1 + v2, M2 + v1)"""
        a = lambda_series([(2, -1), (4, Fraction(1, 12))], 6)
        b = lambda_series([(-2, 1), (0, Fraction(1, 12))], 2)
        self.assertEqual((a * b).max_exp, 4)

    def test_pole_below_minus_two_rejected(self):
        """Test that poles below lambda^-2 are rejected"""
        pole = lambda_series([(-2, 1)], 2)
        with self.assertRaises(SeriesError):
            pole * pole
        with self.assertRaises(SeriesError):
            LambdaSeries(-3, [1])

    def test_invert_chord_square(self):
        """(e^w - 2 + e^-w)^-1 = w^-2 - 1/12 + w^2/240 - ..."""
        cosh_terms = {2 * k: Fraction(2, math_factorial(2 * k)) for k in range(1, 5)}
        inverse = LambdaSeries.from_dict(cosh_terms, 8, variable="w").invert()
        self.assertEqual(inverse.max_exp, 4)
        self.assertEqual(inverse.min_exp, -2)
        self.assertEqual(inverse[-2], 1)
        self.assertEqual(inverse[0], Fraction(-1, 12))
        self.assertEqual(inverse[2], Fraction(1, 240))

    def test_invert_identity(self):
        """Test that one inverts to one"""
        one = LambdaSeries.one(4)
        self.assertTrue(series_invert(one) == one)

    def test_invert_zero_rejected(self):
        """Test that zero has no inverse"""
        with self.assertRaises(SeriesError):
            LambdaSeries.zero(4).invert()

    def test_coefficient_beyond_truncation(self):
        """Test that unknown coefficients raise"""
        with self.assertRaises(SeriesError):
            lambda_series([(0, 1)], 2)[3]

    def test_rescale(self):
        """x -> 2x scales the coefficient of x^e by 2^e"""
        f = lambda_series([(-2, 1), (0, Fraction(1, 12)), (2, Fraction(1, 240))], 2)
        g = f.rescale(2)
        self.assertEqual(g[-2], Fraction(1, 4))
        self.assertEqual(g[0], Fraction(1, 12))
        self.assertEqual(g[2], Fraction(4, 240))

    def test_add_keeps_minimum_truncation(self):
        """Test that a sum keeps the smaller truncation"""
        a = lambda_series([(0, 1)], 2)
        b = lambda_series([(0, 1), (4, 1)], 6)
        total = a + b
        self.assertEqual(total.max_exp, 2)
        self.assertEqual(total[0], 2)

    def test_render(self):
        """Test the text form"""
        text = lambda_series([(-2, 1), (0, Fraction(1, 12))], 0).render()
        self.assertIn("1·λ^-2", text)
        self.assertIn("1/12·λ^0", text)

    @given(coefficient_lists, coefficient_lists, coefficient_lists)
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, a, b, c):
        """Associativity, commutativity and distributivity at fixed truncation"""
        a, b, c = series_from(a), series_from(b), series_from(c)
        self.assertTrue(series_add(a, b) == series_add(b, a))
        self.assertTrue(series_mul(a, b) == series_mul(b, a))
        self.assertTrue((a + b) + c == a + (b + c))
        self.assertTrue((a * b) * c == a * (b * c))
        self.assertTrue(a * (b + c) == a * b + a * c)
        self.assertTrue(series_add(a, series_neg(a)).is_zero())

    @given(coefficient_lists, coefficient_lists, coefficient_lists)
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms_with_pole(self, a, b, c):
        """Associativity, commutativity and distributivity when one factor starts at lambda^-2"""
        a, b, c = series_from(a, min_exp=-2), series_from(b), series_from(c, min_exp=2)
        self.assertTrue(a * b == b * a)
        self.assertTrue((a * b) * c == a * (b * c))
        self.assertTrue(a * (b + c) == a * b + a * c)
        self.assertTrue((b + c) * a == b * a + c * a)

    @given(coefficient_lists.filter(lambda cs: cs[0] != 0))
    @settings(max_examples=200, deadline=None)
    def test_invert_times_self_is_one(self, coeffs):
        """Test s * s^-1 = 1 for random units"""
        s = series_from(coeffs)
        self.assertTrue(s * s.invert() == 1)

    @given(coefficient_lists.filter(lambda cs: cs[0] != 0), st.sampled_from([-2, -1, 1, 2]))
    @settings(max_examples=50, deadline=None)
    def test_invert_laurent(self, coeffs, shift):
        """The inverse of x^v u(x) starts at x^-v"""
        s = series_from(coeffs, min_exp=shift)
        inverse = s.invert()
        self.assertEqual(inverse.valuation, -s.valuation)
        self.assertTrue(s * inverse == 1)


class TestQSeries(unittest.TestCase):
    """Truncated power series in q"""

    def test_add(self):
        """(1 + q) + (1 - q) = 2"""
        total = q_series({0: 1, 1: 1}, 3) + q_series({0: 1, 1: -1}, 3)
        self.assertEqual(total, q_series({0: 2}, 3))

    def test_invert_geometric(self):
        """(1 - q)^-1 = 1 + q + q^2 + q^3"""
        inverse = series_invert(q_series({0: 1, 1: -1}, 3))
        self.assertEqual(inverse, q_series({0: 1, 1: 1, 2: 1, 3: 1}, 3))

    def test_invert_without_constant_rejected(self):
        """Test that a series without constant term has no inverse"""
        with self.assertRaises(SeriesError):
            q_series({1: 1}, 3).invert()

    def test_product_truncates(self):
        """Test that a product keeps the smaller truncation"""
        product = q_series({0: 1, 1: 1}, 2) * q_series({0: 1, 1: 1}, 4)
        self.assertEqual(product.trunc, 2)
        self.assertEqual(product, q_series({0: 1, 1: 2, 2: 1}, 2))

    def test_scale_and_neg(self):
        """Test scaling and negation"""
        s = q_series({1: 2, 3: 5}, 4)
        self.assertEqual(series_scale(s, Fraction(1, 2)), q_series({1: 1, 3: Fraction(5, 2)}, 4))
        self.assertTrue((s + series_neg(s)).is_zero())

    def test_lambda_coefficients(self):
        """QSeries works over lambda-series coefficients too"""
        f = lambda_series([(-2, 1)], 2)
        s = QSeries(3, {1: f, 2: f.scale(Fraction(1, 8))})
        doubled = s + s
        self.assertEqual(doubled[2][-2], Fraction(1, 4))
        self.assertTrue((s - s).is_zero())

    def test_no_keys_above_truncation(self):
        """Test that degrees above the truncation are dropped"""
        s = QSeries(2, {1: Fraction(1), 5: Fraction(3)})
        self.assertEqual(list(s.degrees()), [1])
        with self.assertRaises(SeriesError):
            s[3]

    @given(q_coefficients, q_coefficients, q_coefficients)
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, a, b, c):
        """Associativity, commutativity and distributivity at q-truncation 5"""
        a, b, c = QSeries(5, a), QSeries(5, b), QSeries(5, c)
        self.assertEqual(a + b, b + a)
        self.assertEqual(a * b, b * a)
        self.assertEqual((a + b) + c, a + (b + c))
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertTrue((a - a).is_zero())


class TestOperators(unittest.TestCase):
    """theta_q, the shift symbol and the real derivative"""

    def test_theta_q_li3_to_li2(self):
        """theta_q(q + q^2/8 + q^3/27) = q + q^2/4 + q^3/9"""
        li3 = q_series({1: 1, 2: Fraction(1, 8), 3: Fraction(1, 27)}, 3)
        self.assertEqual(theta_q(li3), q_series({1: 1, 2: Fraction(1, 4), 3: Fraction(1, 9)}, 3))

    def test_theta_q_kills_constants(self):
        """Test that theta_q kills constants"""
        self.assertTrue(theta_q(q_series({0: 7}, 3)).is_zero())

    def test_theta_inverse(self):
        """Test theta_q^-k on a series without constant term"""
        s = q_series({1: 1, 2: 4, 3: 9}, 3)
        self.assertEqual(theta_q_inverse(s, 2), q_series({1: 1, 2: 1, 3: 1}, 3))
        with self.assertRaises(SeriesError):
            theta_q_inverse(q_series({0: 1}, 3))

    def test_real_derivative_power_sign(self):
        """((1/2pi) d/dt)^2 acts on q^n as -n^2"""
        s = q_series({2: 1}, 3)
        self.assertEqual(real_derivative_power(s, 2), q_series({2: -4}, 3))
        self.assertEqual(real_derivative_power(s, 4), q_series({2: 16}, 3))
        with self.assertRaises(SeriesError):
            real_derivative_power(s, 3)

    def test_central_difference_symbol(self):
        """Test the first coefficients of 2cos(n lambda) - 2"""
        one = central_difference_symbol(1, 4)
        self.assertEqual(one.to_dict(), {2: -1, 4: Fraction(1, 12)})
        self.assertEqual(central_difference_symbol(2, 2).to_dict(), {2: -4})
        self.assertTrue(central_difference_symbol(3, 0).is_zero())

    def test_central_difference_scaling(self):
        """Coefficient at lambda^2k scales by n^2k"""
        base = central_difference_symbol(1, 12)
        for n in range(1, 8):
            self.assertTrue(central_difference_symbol(n, 12) == base.rescale(n))

    def test_central_difference_matches_cosine(self):
        """Test the symbol against sympy"""
        x = sp.Symbol("x")
        expansion = sp.series(2 * sp.cos(3 * x) - 2, x, 0, 11).removeO()
        symbol = central_difference_symbol(3, 10)
        for e in range(0, 11):
            expected = sp.Rational(expansion.coeff(x, e))
            self.assertEqual(symbol[e], Fraction(int(expected.p), int(expected.q)))


class TestRatFunc(unittest.TestCase):
    """Rational functions of q in normal form"""

    def test_geometric_expansion(self):
        """q/(1-q) = q + q^2 + q^3 + q^4"""
        f = RatFunc.from_coeffs([0, 1], [1, -1])
        self.assertEqual(f.expand(4), q_series({1: 1, 2: 1, 3: 1, 4: 1}, 4))

    def test_theta(self):
        """theta_q q/(1-q) = q/(1-q)^2"""
        f = RatFunc.from_coeffs([0, 1], [1, -1])
        self.assertEqual(theta_q_rat(f), RatFunc.from_coeffs([0, 1], [1, -2, 1]))

    def test_normal_form(self):
        """Common factors cancel and the lowest denominator coefficient becomes 1"""
        f = RatFunc.from_coeffs([0, 2, -2], [2, -4, 2])
        self.assertEqual(f.numerator_coeffs(), [0, 1])
        self.assertEqual(f.denominator_coeffs(), [1, -1])

    def test_zero_denominator_rejected(self):
        """Test that a zero denominator is rejected"""
        with self.assertRaises(SeriesError):
            RatFunc.from_coeffs([1], [0])

    def test_theta_commutes_with_expansion(self):
        """theta_q then expand equals expand then theta_q to degree 30"""
        samples = [
            RatFunc.from_coeffs([0, 1], [1, -1]),
            RatFunc.from_coeffs([1, 3], [1, -2, 5]),
            RatFunc.from_expr((Q + Q ** 3) / (1 - Q) ** 4),
            RatFunc.from_coeffs([Fraction(1, 2), 0, 7], [3, 1]),
        ]
        for f in samples:
            self.assertEqual(theta_q_rat(f).expand(30), theta_q(f.expand(30)))

    def test_expansion_matches_sympy(self):
        """Test the expansion against sympy"""
        f = RatFunc.from_coeffs([1, 3], [1, -2, 5])
        expansion = sp.series(f.as_expr(), Q, 0, 16).removeO()
        series = f.expand(15)
        for n in range(16):
            expected = sp.Rational(expansion.coeff(Q, n))
            self.assertEqual(series[n], Fraction(int(expected.p), int(expected.q)))


if __name__ == "__main__":
    unittest.main()
