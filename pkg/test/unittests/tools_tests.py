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
from math import cos, pi
from unittest.case import TestCase

from pentapods.exactalg import variables
from pentapods.tools import relabelings, rational, text, to_float
from pentapods.tools.algebra import cramer, determinant, nullspace, rank, \
    solve
from pentapods.tools.numerics import bisection_method, numeric_rank


class ConstantUnitTests(TestCase):

    def test_rational(self):
        self.assertEqual(Fraction(1, 2), rational('3/6'))
        self.assertEqual(Fraction(-2), rational(' -2 '))
        self.assertEqual(Fraction(1, 3), rational(Fraction(1, 3)))
        for value in ('1/0', '1.5', 'x', '', '1/-2'):
            with self.assertRaises(ValueError):
                rational(value)
        for value in (True, 1.5, None):
            with self.assertRaises(TypeError):
                rational(value)

    def test_text(self):
        self.assertEqual('3', text(Fraction(6, 2)))
        self.assertEqual('-1/3', text(Fraction(-2, 6)))
        self.assertEqual('0', text(0))

    def test_to_float(self):
        self.assertEqual(.25, to_float(Fraction(1, 4)))
        self.assertEqual([1., .5], list(to_float([1, Fraction(1, 2)])))


class AlgebraUnitTests(TestCase):

    def test_determinant(self):
        self.assertEqual(Fraction(5), determinant([[2, 1], [1, 3]]))
        self.assertEqual(Fraction(0), determinant([[1, 2], [2, 4]]))
        self.assertEqual(Fraction(-1), determinant([[0, 1], [1, 0]]))
        self.assertEqual(Fraction(1), determinant([]))
        with self.assertRaises(ValueError):
            determinant([[1, 2]])

    def test_symbolic_determinant(self):
        a, b = variables('a b')
        self.assertEqual(a * a - b * b, determinant([[a, b], [b, a]]))

    def test_rank_and_nullspace(self):
        m = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
        self.assertEqual(2, rank(m))
        kernel = nullspace(m)
        self.assertEqual(1, len(kernel))
        for row in m:
            self.assertEqual(0, sum(a * b for a, b in zip(row, kernel[0])))

    def test_solve(self):
        self.assertEqual([Fraction(1), Fraction(2)],
                         solve([[1, 1], [1, -1]], [3, -1]))
        self.assertIsNone(solve([[1, 1], [2, 2]], [1, 2]))

    def test_cramer(self):
        nums, den = cramer([[1, 1], [1, -1]], [3, -1])
        self.assertEqual([Fraction(1), Fraction(2)], [n / den for n in nums])


class NumericsUnitTests(TestCase):

    def test_bisection(self):
        root = bisection_method(cos, 0., pi)
        self.assertAlmostEqual(pi / 2, root)
        with self.assertRaises(ValueError):
            bisection_method(cos, 0., 1.)
        with self.assertRaises(RuntimeError):
            bisection_method(cos, 0., 3., max_iter=3)

    def test_numeric_rank(self):
        self.assertEqual(2, numeric_rank([[1., 0., 0.], [0., 1., 0.],
                                          [1., 1., 1e-12]]))
        self.assertEqual(0, numeric_rank([[0., 0.], [0., 0.]]))


class RelabelingUnitTests(TestCase):

    def test_count(self):
        self.assertEqual(240, len(list(relabelings(5))))
        self.assertEqual(720, len(list(relabelings(6, swap=False))))
        first = next(iter(relabelings(3)))
        self.assertEqual(((0, 1, 2), False), first)
