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
from hypothesis.strategies import fractions, integers, lists, tuples
from scipy.spatial.transform import Rotation

from pentapods.exactalg import variables
from pentapods.geometry import PodDesign
from pentapods.study import E, NORM, PSI, QuadraticForm8, StudyPoint, \
    constraint_jacobian, delta, homogeneous_rotation, leg_form, norm, psi, \
    radii_at, rotation_translation, sphere_condition, translation_to_f
from pentapods.tools.algebra import mat_mul, transpose

small = integers(-6, 6)
coordinate = fractions(-5, 5, max_denominator=4)
euler = lists(small, min_size=4, max_size=4).filter(any)
vector = tuples(coordinate, coordinate, coordinate)


def _image(pose, m):
    rot, t = rotation_translation(pose)
    return tuple(sum(r * x for r, x in zip(row, m)) + s
                 for row, s in zip(rot, t))


def _distance2(p, q):
    return sum((a - b) ** 2 for a, b in zip(p, q))


class StudyPointUnitTests(TestCase):

    def test_identity(self):
        p = StudyPoint((1, 0, 0, 0), (0, 0, 0, 0))
        self.assertEqual((Fraction(0), Fraction(1)), (p.psi, p.norm))
        self.assertTrue(p.exact)
        self.assertTrue(p.is_proper())
        rot, t = rotation_translation(p)
        self.assertEqual([[1, 0, 0], [0, 1, 0], [0, 0, 1]], rot)
        self.assertEqual((0, 0, 0), t)

    def test_half_turn(self):
        rot, _ = rotation_translation(StudyPoint((0, 1, 0, 0), (0,) * 4))
        self.assertEqual([[1, 0, 0], [0, -1, 0], [0, 0, -1]], rot)

    def test_validation(self):
        with self.assertRaises(ValueError):
            StudyPoint((1, 0, 0), (0, 0, 0, 0))
        with self.assertRaises(ValueError):
            StudyPoint((0,) * 4, (0,) * 4)
        cone = StudyPoint((0, 0, 0, 0), (1, 0, 0, 0))
        self.assertFalse(cone.is_proper())
        with self.assertRaises(ValueError):
            rotation_translation(cone)
        with self.assertRaises(ValueError):
            cone.normalized()

    def test_float(self):
        p = StudyPoint((1., 0, 0, 0), (0, .5, 0, 0))
        self.assertFalse(p.exact)
        self.assertEqual(8, len(p))
        self.assertEqual(p.as_float(), p)

    def test_normalized(self):
        p = StudyPoint.from_pose((-2, 0, 0, 0), (1, 2, 3)).normalized()
        self.assertEqual(Fraction(1), p.norm)
        self.assertEqual(Fraction(1), p.e[0])
        self.assertEqual((1, 2, 3), rotation_translation(p)[1])
        q = StudyPoint.from_pose((1, 1, 0, 0), (0, 0, 0)).normalized()
        self.assertFalse(q.exact)
        self.assertAlmostEqual(1., q.norm)

    def test_from_rotation(self):
        rotation = Rotation.from_rotvec([.3, -.2, .5])
        p = StudyPoint.from_rotation(rotation, (1., 2., 3.))
        rot, t = rotation_translation(p)
        for row, expected in zip(rot, rotation.as_matrix()):
            for a, b in zip(row, expected):
                self.assertAlmostEqual(a, b)
        for a, b in zip(t, (1., 2., 3.)):
            self.assertAlmostEqual(a, b)

    @settings(max_examples=100, deadline=None)
    @given(euler, vector)
    def test_pose_round_trip(self, e, t):
        p = StudyPoint.from_pose(e, t)
        self.assertEqual(0, p.psi)
        self.assertEqual(tuple(t), rotation_translation(p)[1])
        self.assertEqual(p.transform((0, 0, 0)), tuple(t))

    @settings(max_examples=100, deadline=None)
    @given(euler)
    def test_rotation_orthogonal(self, e):
        rot = homogeneous_rotation(e)
        n = sum(x * x for x in e)
        product = mat_mul(rot, transpose(rot))
        self.assertEqual([[n * n * int(i == j) for j in range(3)]
                          for i in range(3)], product)


class QuadraticFormUnitTests(TestCase):

    def test_psi_and_norm(self):
        e0, e1, e2, e3, f0, f1, f2, f3 = variables('e0 e1 e2 e3 f0 f1 f2 f3')
        self.assertEqual(e0 * f0 + e1 * f1 + e2 * f2 + e3 * f3, psi())
        self.assertEqual(e0 ** 2 + e1 ** 2 + e2 ** 2 + e3 ** 2, norm())
        self.assertEqual(psi(), PSI.as_poly())
        self.assertEqual(NORM.matrix, QuadraticForm8.from_poly(norm()).matrix)

    def test_validation(self):
        with self.assertRaises(ValueError):
            QuadraticForm8([[0] * 7] * 7)
        matrix = [[0] * 8 for _ in range(8)]
        matrix[0][1] = 1
        with self.assertRaises(ValueError):
            QuadraticForm8(matrix)
        with self.assertRaises(ValueError):
            QuadraticForm8.from_poly(E[0] * E[1] * E[2])

    def test_homogeneous_rotation_symbolic(self):
        rot = homogeneous_rotation(E)
        self.assertEqual(norm() ** 2,
                         mat_mul(rot, transpose(rot))[0][0])

    def test_compile_symbolic(self):
        form = sphere_condition((0, 0, 0), (1, 0, 0), 'R1sq')
        self.assertTrue(form.symbolic)
        with self.assertRaises(ValueError):
            form.compile()

    def test_float_evaluation(self):
        form = sphere_condition((1, 2, 3), (0, 1, -1), 5)
        p = StudyPoint.from_pose((1, 2, -1, 1), (1, 0, 2))
        self.assertAlmostEqual(float(form.evaluate(p)),
                               form.evaluate(p.as_float()))

    @settings(max_examples=100, deadline=None)
    @given(vector, vector, coordinate, euler, vector)
    def test_sphere_semantics(self, m, M, r2, e, t):
        p = StudyPoint.from_pose(e, t)
        value = sphere_condition(m, M, r2).evaluate(p)
        expected = p.norm * (_distance2(_image(p, m), M) - r2)
        self.assertEqual(expected, value)

    @settings(max_examples=100, deadline=None)
    @given(vector, vector, coordinate, euler, vector, integers(1, 5))
    def test_homogeneity(self, m, M, r2, e, t, c):
        p = StudyPoint.from_pose(e, t)
        form = sphere_condition(m, M, r2)
        self.assertEqual(form.evaluate(p) * c * c,
                         form.evaluate(p.scaled(c)))


class LegFormUnitTests(TestCase):

    def setUp(self):
        self.design = PodDesign([((0, 0, 0), (1, 0, 0)),
                                 ((1, 0, 0), (0, 2, 0)),
                                 ((0, 1, 0), (0, 0, 3), 7)])

    def test_symbolic_radius(self):
        form = leg_form(self.design, 1)
        self.assertIn('R1sq', form.as_poly().variables)
        self.assertNotIn('R3sq', leg_form(self.design, 3).as_poly().variables)
        with self.assertRaises(ValueError):
            leg_form(self.design, 4)

    def test_delta_linear_in_f(self):
        d = delta(1, 2, self.design)
        self.assertEqual(1, d.total_degree(('f0', 'f1', 'f2', 'f3')))
        with self.assertRaises(ValueError):
            delta(1, 1, self.design)

    def test_radii_and_jacobian(self):
        p = StudyPoint.from_pose((1, 1, 0, 2), (1, -1, 2))
        radii = radii_at(self.design, p)
        for leg, r2 in zip(self.design.legs, radii):
            value = sphere_condition(leg.platform, leg.base, r2).evaluate(p)
            self.assertEqual(0, value)
        jacobian = constraint_jacobian(self.design, p, radii)
        self.assertEqual(4, len(jacobian))
        self.assertEqual(8, len(jacobian[0]))
        self.assertEqual(list(p.f) + list(p.e),
                         [x for x in jacobian[0]])

    def test_translation_to_f(self):
        f = translation_to_f((1, 0, 0, 0), (2, 4, 6))
        self.assertEqual((0, 1, 2, 3), f)
