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

from pentapods.classify import CASES, CASE_TITLES, classify, \
    classify_hexapod, classify_pentapod, collinear_base_side_cases, \
    higher_dimensional, necessary_conditions_thm1a
from pentapods.cli import bundled_designs, read_design
from pentapods.geometry import PodDesign

# leg (1-based), side and axis of a move leaving the case
PERTURBATIONS = {
    'congruent': (5, 'base', 0),
    'thm3_item1': (5, 'base', 0),
    'thm3_item2': (5, 'base', 0),
    'thm4_item1': (5, 'base', 0),
    'thm4_item2a': (5, 'base', 0),
    'thm4_item2b': (3, 'base', 0),
    'thm4_item3': (5, 'base', 0),
    'alpha': (5, 'base', 1),
    'beta': (3, 'platform', 0),
    'gamma': (4, 'platform', 0),
    'thm6_item1': (6, 'base', 0),
    'thm6_item2': (6, 'base', 0),
    'thm6_item3': (2, 'platform', 1),
    'thm6_item4': (5, 'platform', 1),
    'thm6_item5': (6, 'base', 0),
    'thm6_item6': (6, 'base', 0),
}

PLANAR = (0, 0, 0), (1, 0, 0), (3, 0, 0), (1, 3, 0), (3, 3, 0)


class BundledDesignUnitTests(TestCase):

    def setUp(self):
        self.designs = {name: read_design(name) for name in bundled_designs()}

    def test_bundled(self):
        self.assertEqual(set(PERTURBATIONS) |
                         {'generic', 'pencil', 'four_collinear'},
                         set(self.designs))
        for name in PERTURBATIONS:
            self.assertIn(self.designs[name].case, CASES)

    def test_exact_case(self):
        for name, design in self.designs.items():
            report = classify(design)
            expected = (design.case,) if design.case else ()
            self.assertEqual(expected, report.labels, name)

    def test_perturbed(self):
        for name, (leg, side, axis) in PERTURBATIONS.items():
            design = self.designs[name].perturbed(leg, side, axis)
            report = classify(design)
            self.assertEqual((), report.labels, name)
            self.assertIsNone(report.label, name)
            self.assertEqual('no case', report.text().split('\n')[0], name)

    def test_relabeled_and_swapped(self):
        for name in ('thm4_item2b', 'beta', 'thm6_item4'):
            design = self.designs[name]
            perm = tuple(reversed(range(design.n)))
            self.assertEqual(design.case,
                             classify(design.relabeled(perm)).label, name)
            self.assertEqual(design.case,
                             classify(design.swapped()).label, name)

    def test_singular_designs(self):
        self.assertTrue(classify(self.designs['pencil']).singular)
        self.assertTrue(classify(self.designs['four_collinear']).singular)
        self.assertFalse(classify(self.designs['generic']).singular)


class ReportUnitTests(TestCase):

    def test_spherical_text(self):
        report = classify(read_design('thm4_item1'))
        match = report.case('thm4.1')
        self.assertTrue(match.spherical)
        self.assertEqual('Theorem 4, item 1; spherical center M3=M4=M5; β=1',
                         match.text())
        self.assertEqual(1, report.beta)
        center = match.witness['center']
        self.assertEqual((0, 0, 0), center['platform'])
        self.assertEqual((1, 1, 0), center['base'])
        with self.assertRaises(ValueError):
            report.case('thm2')

    def test_translational_text(self):
        report = classify(read_design('congruent'))
        self.assertEqual('Theorem 2; β=−1', report.cases[0].text())
        self.assertEqual(-1, report.beta)
        self.assertFalse(report.cases[0].spherical)

    def test_to_dict(self):
        data = classify(read_design('thm4_item1')).to_dict()
        self.assertEqual('pentapod', data['type'])
        self.assertEqual('thm4.1', data['cases'][0]['label'])
        self.assertEqual([1, 2, 3, 4, 5], data['cases'][0]['permutation'])
        self.assertEqual(['1', '1', '0'],
                         data['cases'][0]['witness']['center']['base'])
        self.assertEqual(1, data['beta'])
        self.assertEqual(2, data['p'])
        self.assertTrue(data['mobility2'])

    def test_titles(self):
        for label in CASES:
            self.assertIn(label, CASE_TITLES)
        self.assertEqual('Theorem 6, item 3', CASE_TITLES['thm6.3'])


class PentapodUnitTests(TestCase):

    def test_congruent_and_schoenflies(self):
        base = [(x + 1, y + 1, z) for x, y, z in PLANAR]
        report = classify(PodDesign(zip(PLANAR, base)))
        self.assertEqual(('thm3.1', 'thm3.2'), report.labels)
        witness = report.case('thm3.2').witness
        self.assertEqual((0, 1, 2), witness['g'])
        self.assertEqual((3, 4), witness['h'])
        self.assertEqual((Fraction(1), 0, 0), witness['axis'])

    def test_necessary_conditions(self):
        conditions = necessary_conditions_thm1a(read_design('thm3_item2'))
        self.assertEqual(('b', 'd'), conditions.conditions)
        self.assertIsNone(conditions.p)
        conditions = necessary_conditions_thm1a(read_design('thm4_item1'))
        self.assertEqual(('c',), conditions.conditions)
        self.assertEqual(2, conditions.p)
        self.assertIn('c', conditions)
        generic = necessary_conditions_thm1a(read_design('generic'))
        self.assertFalse(generic)

    def test_similar(self):
        points = (0, 0, 0), (2, 0, 0), (0, 3, 0), (0, 0, 4), (1, 2, 3)
        platform = [(x + 1, y, z) for x, y, z in points]
        base = [(2 * x, 2 * y, 2 * z) for x, y, z in points]
        conditions = necessary_conditions_thm1a(PodDesign(zip(platform,
                                                              base)))
        self.assertIn('a', conditions)
        self.assertNotIn('b', conditions)

    def test_collinear_side(self):
        matches = collinear_base_side_cases(read_design('alpha'))
        self.assertEqual(['alpha'], [m.label for m in matches])
        self.assertIn('condition', matches[0].witness)
        self.assertEqual([], collinear_base_side_cases(read_design('generic')))

    def test_collinear_side_is_base(self):
        for name in ('alpha', 'beta', 'gamma'):
            design = read_design(name)
            for d in (design, design.swapped()):
                matches = collinear_base_side_cases(d)
                self.assertEqual([name], [m.label for m in matches], name)

    def test_pencil_perturbed(self):
        design = read_design('pencil').perturbed(5, 'platform', 0)
        self.assertEqual(('cor1b.ii',), higher_dimensional(design))
        report = classify_pentapod(design)
        self.assertEqual((), report.labels)
        self.assertEqual(1, len(report.notes))
        design = PodDesign([((k % 2, 0, 0), (k, 1, 0)) for k in range(5)])
        self.assertEqual((), higher_dimensional(design))

    def test_higher_dimensional(self):
        x, y, z = (1, 0, 0), (0, 1, 0), (0, 0, 1)
        o, w = (0, 0, 0), (2, 2, 2)
        design = PodDesign(zip((o, o, o, x, y), (x, y, z, w, w)))
        self.assertEqual(('cor1b.i',), higher_dimensional(design))
        self.assertFalse(classify(design).mobility2)
        design = PodDesign(zip((o, o, o, o, x), (o, x, y, z, w)))
        self.assertEqual(('cor1b.ii',), higher_dimensional(design))
        design = PodDesign([((k, 0, 0), (2 * k, 1, 0)) for k in range(5)])
        self.assertEqual(('cor1b.iii',), higher_dimensional(design))
        report = classify_pentapod(design)
        self.assertEqual((), report.labels)
        self.assertEqual(1, len(report.notes))

    def test_validation(self):
        with self.assertRaises(ValueError):
            classify(PodDesign([((k, 0, 0), (0, k, 0)) for k in range(4)]))
        with self.assertRaises(ValueError):
            classify_pentapod(read_design('thm6_item1'))
        with self.assertRaises(ValueError):
            classify_hexapod(read_design('congruent'))
        with self.assertRaises(ValueError):
            necessary_conditions_thm1a(read_design('thm6_item1'))
        symbolic = [(('a', 0, 0), (0, 0, 0))] + \
            [((k, 1, 0), (0, k, 1)) for k in range(4)]
        with self.assertRaises(ValueError):
            classify(PodDesign(symbolic))


class HexapodUnitTests(TestCase):

    def test_spherical(self):
        report = classify_hexapod(read_design('thm6_item6'))
        self.assertEqual(('thm6.6',), report.labels)
        self.assertTrue(report.cases[0].spherical)
        self.assertIsNone(report.necessary)
        self.assertEqual(1, report.beta)

    def test_translational(self):
        report = classify(read_design('thm6_item1'))
        self.assertEqual('Theorem 6, item 1; β=−1', report.cases[0].text())
