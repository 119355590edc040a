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


from csv import reader
from fractions import Fraction
from io import StringIO
from unittest.case import TestCase

from pentapods.cli import read_design
from pentapods.geometry import PodDesign, architecturally_singular
from pentapods.motions import _grid, check_samples, congruence_rotation, \
    local_mobility, motion_samples, schoenflies_self_motion, \
    spherical_self_motion, translation_samples, translational_self_motion, \
    write_csv
from pentapods.study import StudyPoint, radii_at

SPATIAL = (0, 0, 0), (2, 0, 0), (0, 3, 0), (0, 0, 4), (1, 2, 3)
SAMPLES = 16


def _shifted(design, leg, shift):
    legs = []
    for k, (m, M, r2) in enumerate(design.legs):
        if k == leg:
            m = tuple(a + s for a, s in zip(m, shift))
            M = tuple(a + s for a, s in zip(M, shift))
        legs.append((m, M, r2))
    return PodDesign(legs, design.name)


class TranslationUnitTests(TestCase):

    def setUp(self):
        self.design = read_design('congruent')

    def test_congruence_rotation(self):
        rot = congruence_rotation(self.design.platform, self.design.base)
        self.assertEqual([[1, 0, 0], [0, 1, 0], [0, 0, 1]], rot)
        mirrored = [(-x, y, z) for x, y, z in SPATIAL]
        self.assertIsNone(congruence_rotation(SPATIAL, mirrored))

    def test_two_dim(self):
        motion = translational_self_motion(self.design)
        self.assertEqual('two_dim', motion.kind)
        self.assertEqual([0], motion.ranks)

    def test_one_dim_circular(self):
        mirrored = [(-x, y, z + 1) for x, y, z in SPATIAL]
        motion = translational_self_motion(PodDesign(zip(SPATIAL, mirrored)),
                                           samples=5, seed=1)
        self.assertEqual('one_dim_circular', motion.kind)
        self.assertEqual(5, len(motion.orientations))
        self.assertTrue(all(r <= 1 for r in motion.ranks))

    def test_none(self):
        motion = translational_self_motion(read_design('generic'))
        self.assertEqual('none', motion.kind)
        self.assertEqual([], motion.orientations)

    def test_samples(self):
        samples = translation_samples(self.design, SAMPLES)
        self.assertEqual(SAMPLES, len(samples))
        check = check_samples(samples)
        self.assertTrue(check.passed)
        for s in samples:
            self.assertAlmostEqual(1., s.lengths[0])

    def test_radii(self):
        design = self.design.with_radii([4] * 5)
        samples = translation_samples(design, 4)
        self.assertAlmostEqual(4., samples[0].lengths[2])
        with self.assertRaises(ValueError):
            translation_samples(self.design.with_radii([1, 1, 1, 1, 2]))
        with self.assertRaises(ValueError):
            translation_samples(read_design('generic'))


class SphericalUnitTests(TestCase):

    def setUp(self):
        self.design = read_design('thm4_item1')

    def test_samples(self):
        samples = spherical_self_motion(self.design, samples=SAMPLES)
        self.assertEqual(SAMPLES, len(samples))
        check = check_samples(samples)
        self.assertTrue(check.passed)
        self.assertLessEqual(check.deviation, 1e-9)

    def test_mobility(self):
        samples = motion_samples(self.design, 'thm4.1', 5)
        for s in samples:
            self.assertEqual(2, local_mobility(self.design, s.pose,
                                               radii=s.lengths))

    def test_no_spherical_case(self):
        with self.assertRaises(ValueError):
            spherical_self_motion(read_design('congruent'))
        with self.assertRaises(ValueError):
            motion_samples(read_design('generic'))

    def test_hexapod(self):
        design = read_design('thm6_item6')
        check = check_samples(motion_samples(design, samples=SAMPLES))
        self.assertTrue(check.passed)


class SchoenfliesUnitTests(TestCase):

    def setUp(self):
        self.design = read_design('thm3_item2')

    def test_samples(self):
        samples = schoenflies_self_motion(self.design, samples=SAMPLES)
        self.assertEqual(SAMPLES, len(samples))
        self.assertTrue(check_samples(samples).passed)

    def test_shift_along_axis(self):
        samples = schoenflies_self_motion(self.design, samples=SAMPLES)
        for leg in range(self.design.n):
            moved = _shifted(self.design, leg, (Fraction(5, 2), 0, 0))
            for s in samples:
                for a, b in zip(radii_at(moved, s.pose), s.lengths):
                    self.assertAlmostEqual(b, float(a), places=9)

    def test_impossible_radii(self):
        design = self.design.with_radii(['1/100'] * 5)
        with self.assertRaises(ValueError):
            schoenflies_self_motion(design, samples=SAMPLES)
        design = self.design.with_radii([1, 2, 1, 1, 1])
        with self.assertRaises(ValueError):
            schoenflies_self_motion(design, samples=SAMPLES)

    def test_mobility(self):
        for s in schoenflies_self_motion(self.design, samples=5):
            self.assertGreaterEqual(
                local_mobility(self.design, s.pose, radii=s.lengths), 2)

    def test_few_samples(self):
        for n in (1, 2, 3, 5, 7):
            samples = schoenflies_self_motion(self.design, samples=n)
            self.assertEqual(n, len(samples))
            self.assertTrue(check_samples(samples).passed)

    def test_grid_size(self):
        self.assertEqual([2, 2, 2, 4, 4, 10],
                         [_grid(n) for n in (1, 2, 3, 5, 9, 100)])


class LocalMobilityUnitTests(TestCase):

    def test_generic(self):
        design = read_design('generic')
        witness = architecturally_singular(design).witness
        self.assertEqual(1, local_mobility(design, witness))
        self.assertEqual(1, local_mobility(design, witness.scaled(3)))
        self.assertEqual(1, local_mobility(design, witness, exact=False))

    def test_exact_translation(self):
        design = read_design('congruent')
        pose = StudyPoint.from_pose((1, 0, 0, 0),
                                    (Fraction(1, 2), Fraction(1, 3), 2))
        self.assertGreaterEqual(local_mobility(design, pose), 2)

    def test_off_variety(self):
        design = read_design('generic')
        pose = StudyPoint.from_pose((1, 0, 0, 0), (0, 0, 0))
        with self.assertRaises(ValueError):
            local_mobility(design, pose, radii=[1] * 5)
        with self.assertRaises(ValueError):
            local_mobility(design, StudyPoint((1, 0, 0, 0), (1, 0, 0, 0)))


class OutputUnitTests(TestCase):

    def test_csv(self):
        samples = translation_samples(read_design('congruent'), 4)
        stream = StringIO()
        self.assertEqual(4, write_csv(samples, stream))
        rows = list(reader(StringIO(stream.getvalue())))
        self.assertEqual(5, len(rows))
        self.assertEqual(['u', 'v', 'e0'], rows[0][:3])
        self.assertEqual('l5', rows[0][-1])
        self.assertEqual(18, len(rows[1]))
        self.assertAlmostEqual(1., float(rows[1][-1]))

    def test_empty_check(self):
        self.assertFalse(check_samples([]).passed)
