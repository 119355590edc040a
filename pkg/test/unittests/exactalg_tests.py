# -*- coding: utf-8 -*-

# pentapods
# ---------
# Self-motions of pentapods and hexapods: exact bond elimination,
# design classification and motion verification.
#
# Author:   sonntagsgesicht
# Version:  0.1, copyright Saturday, 17 October 2026
# Website:  https://github.com/sonntagsgesicht/pentapods
# License:  Apache License 2.0 (see LICENSE file)


from fractions import Fraction
from unittest.case import TestCase

from hypothesis import given, settings
from hypothesis.strategies import booleans, composite, integers

from pentapods.exactalg import MultiPoly, factor_out, gaussian_divide, \
    gaussian_parts, gcd, halve_exponents, isqrt_fraction, poly, \
    proportional, reduce_fraction, resultant, strip_monomial, substitute, \
    try_exact_divide, try_square_root, variables

x, y = variables('x y')


@composite
def polys(draw, max_x=2, max_y=2):
    """polynomials in x with a constant leading coefficient in x"""
    deg = draw(integers(1, max_x))
    lead = draw(integers(1, 5)) * (-1 if draw(booleans()) else 1)
    p = lead * x ** deg
    for k in range(deg):
        for j in range(max_y + 1):
            c = draw(integers(-5, 5))
            if c:
                p = p + c * x ** k * y ** j
    return p


class MultiPolyUnitTests(TestCase):

    def test_arithmetic(self):
        p = (x + y) * (x - y)
        self.assertEqual(x ** 2 - y ** 2, p)
        self.assertEqual(2, p.degree())
        self.assertEqual(2, p.degree('y'))
        self.assertEqual(0, p.degree('z'))
        self.assertEqual(('x', 'y'), p.variables)
        self.assertEqual(Fraction(3), MultiPoly(3).constant())
        self.assertTrue(MultiPoly(0).is_zero)
        self.assertEqual(-1, MultiPoly(0).degree())
        self.assertEqual(x + y, p / (x - y))
        with self.assertRaises(ValueError):
            _ = p / (x + 2 * y)
        with self.assertRaises(ValueError):
            x.constant()
        with self.assertRaises(TypeError):
            MultiPoly(1.5)

    def test_variable_order(self):
        e0, f1, a = variables('e0 f1 a')
        self.assertEqual(('e0', 'f1', 'a'), (a * f1 * e0).variables)
        with self.assertRaises(ValueError):
            MultiPoly.variable('1x')

    def test_parse(self):
        p = MultiPoly.parse('3/2*e0^2*f1 - x + 7')
        self.assertEqual(p, MultiPoly.parse(str(p)))
        self.assertEqual(Fraction(3, 2), p.coefficient('f1', 1)
                         .coefficient('e0', 2).constant())
        self.assertEqual(x - 1, poly('x - 1'))
        self.assertEqual(MultiPoly(Fraction(1, 2)), poly('2/4'))
        with self.assertRaises(ValueError):
            MultiPoly.parse('')
        with self.assertRaises(ValueError):
            MultiPoly.parse('2*x^')

    def test_content(self):
        p = 4 * x * y - 6 * y ** 2
        c, q = p.primitive()
        self.assertEqual(Fraction(2), c)
        self.assertEqual(2 * x * y - 3 * y ** 2, q)
        self.assertEqual({'y': 1}, p.monomial_content())
        q, monom = strip_monomial(p)
        self.assertEqual({'y': 1}, monom)
        self.assertEqual(4 * x - 6 * y, q)

    def test_evaluate_and_subs(self):
        p = x ** 2 + x * y + 1
        self.assertEqual(Fraction(7), p.evaluate({'x': 2, 'y': 1}))
        self.assertEqual(y ** 2 + y * y + 1, p.subs({'x': y}))
        n, d = substitute(p, {'x': (MultiPoly(1), y)})
        self.assertEqual(1 + y ** 2 + y ** 2, n)
        self.assertEqual(y ** 2, d)
        with self.assertRaises(ZeroDivisionError):
            substitute(p, {'x': (1, 0)})

    def test_diff(self):
        p = x ** 3 * y + y
        self.assertEqual(3 * x ** 2 * y, p.diff('x'))
        self.assertEqual(MultiPoly(0), p.diff('z'))


class DivisionUnitTests(TestCase):

    def test_exact_divide(self):
        self.assertEqual(x + y, try_exact_divide(x ** 2 - y ** 2, x - y))
        self.assertIsNone(try_exact_divide(x ** 2 + 1, x - 1))
        self.assertEqual(MultiPoly(0), try_exact_divide(0, x))
        with self.assertRaises(ZeroDivisionError):
            try_exact_divide(x, 0)

    def test_square_root(self):
        self.assertEqual(x + y, try_square_root((x + y) ** 2))
        self.assertEqual(x + y, try_square_root((-x - y) ** 2))
        self.assertIsNone(try_square_root(x ** 2 + y ** 2))
        self.assertIsNone(try_square_root(2 * x ** 2))
        self.assertEqual(MultiPoly(0), try_square_root(0))

    def test_isqrt_fraction(self):
        self.assertEqual(Fraction(3, 2), isqrt_fraction(Fraction(9, 4)))
        self.assertIsNone(isqrt_fraction(2))
        self.assertIsNone(isqrt_fraction(-4))

    def test_factor_out(self):
        p = (x - 1) ** 3 * (x + 1)
        self.assertEqual((x + 1, 3), factor_out(p, x - 1))
        self.assertEqual((p, 0), factor_out(p, MultiPoly(2)))

    def test_proportional(self):
        self.assertEqual(Fraction(2),
                         proportional(4 * x - 6 * y, 2 * x - 3 * y))
        self.assertIsNone(proportional(x + y, x - y))
        self.assertIsNone(proportional(x, 0))
        self.assertEqual(Fraction(1), proportional(0, 0))

    def test_gcd_and_reduce(self):
        g = gcd((x - 1) * (x + y), 2 * (x - 1) * y)
        self.assertEqual(x - 1, g)
        num, den = reduce_fraction((x - 1) * (x + y), 2 * (x - 1))
        self.assertEqual(x + y, num)
        self.assertEqual(MultiPoly(2), den)

    def test_halve_exponents(self):
        e1, e3 = variables('e1 e3')
        bar = MultiPoly.variable('e3bar')
        self.assertEqual(e1 * bar + bar ** 2,
                         halve_exponents(e3 ** 4 + e1 * e3 ** 2,
                                         'e3', 'e3bar'))
        self.assertIsNone(halve_exponents(e3 ** 3, 'e3', 'e3bar'))

    def test_gaussian(self):
        i = MultiPoly.variable('I')
        re, im = gaussian_parts((x + i) ** 2)
        self.assertEqual(x ** 2 - 1, re)
        self.assertEqual(2 * x, im)
        num, den = gaussian_divide(MultiPoly(1), x + i)
        self.assertEqual(x - i, num)
        self.assertEqual(x ** 2 + 1, den)

    @settings(max_examples=100, deadline=None)
    @given(polys(), polys())
    def test_exact_divide_round_trip(self, p, d):
        self.assertEqual(p, try_exact_divide(p * d, d))
        self.assertIsNone(try_exact_divide(p * d + 1, d))

    @settings(max_examples=100, deadline=None)
    @given(polys())
    def test_square_root_round_trip(self, p):
        root = try_square_root(p * p)
        self.assertIn(root, (p, -p))
        self.assertIsNone(try_square_root(x * p * p))


class ResultantUnitTests(TestCase):

    def test_linear(self):
        a, b = variables('a b')
        self.assertEqual(a - b, resultant(x - a, x - b, 'x'))
        self.assertEqual(b - a, resultant(x - b, x - a, 'x'))

    def test_common_root(self):
        p = (x - 1) * (x + y)
        q = (x - 1) * (x - y)
        self.assertTrue(resultant(p, q, 'x').is_zero)

    def test_degree_checks(self):
        with self.assertRaises(ValueError):
            resultant(x + 1, y + 1, 'x')
        with self.assertRaises(ValueError):
            resultant(x ** 2 + 1, x + 1, 'x', degrees=(3, 1))

    def test_symbolic_leading_coefficients(self):
        # Sylvester determinant without reduction
        p = y * x ** 2 + 1
        q = (y + 1) * x - 1
        # res = y * 1 + (y + 1)^2
        self.assertEqual(y + (y + 1) ** 2, resultant(p, q, 'x'))

    @settings(max_examples=100, deadline=None)
    @given(polys(), polys())
    def test_swap_sign(self, p, q):
        sign = (-1) ** (p.degree('x') * q.degree('x'))
        self.assertEqual(resultant(p, q, 'x'),
                         resultant(q, p, 'x') * sign)

    @settings(max_examples=100, deadline=None)
    @given(polys(), polys(), polys())
    def test_multiplicativity(self, p, q, r):
        self.assertEqual(resultant(p * q, r, 'x'),
                         resultant(p, r, 'x') * resultant(q, r, 'x'))

    @settings(max_examples=100, deadline=None)
    @given(polys(), polys(), integers(-4, 4))
    def test_specialization(self, p, q, c):
        res = resultant(p, q, 'x').subs({'y': c})
        self.assertEqual(res, resultant(p.subs({'y': c}),
                                        q.subs({'y': c}), 'x'))
