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


import json
from contextlib import redirect_stderr, redirect_stdout
from io import StringIO
from os import environ, path
from tempfile import TemporaryDirectory
from unittest.case import TestCase
from unittest.mock import patch

from pentapods.bonds import REGISTRY
from pentapods.bonds.registry import SLOW_ENV, register
from pentapods.cli import INPUT_ERROR, MISMATCH, NEGATIVE, SUCCESS, \
    bundled_designs, main, parse_design, read_design, resolve

LEGS = [{'platform': [str(k), '0', '0'], 'base': ['0', str(k), '1']}
        for k in range(5)]


def run(*argv):
    out, err = StringIO(), StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class DesignFileUnitTests(TestCase):

    def test_parse(self):
        design = parse_design({'schema': 1, 'type': 'pentapod',
                               'name': 'line', 'legs': LEGS})
        self.assertEqual(5, design.n)
        self.assertEqual('line', design.name)
        data = dict(legs=LEGS[:2] + [{'platform': ['1/2', '0'],
                                      'base': ['0', '0'],
                                      'radius2': '3'}])
        self.assertEqual(3, parse_design(data).radii[2])

    def test_parse_errors(self):
        bad = [
            [],
            {'schema': 2, 'legs': LEGS},
            {'legs': LEGS[:2]},
            {'legs': LEGS, 'type': 'hexapod'},
            {'legs': LEGS[:4] + [{'platform': ['0', '0', '0']}]},
            {'legs': LEGS[:4] + [{'platform': [1.5, '0', '0'],
                                  'base': ['0', '0', '0']}]},
            {'legs': LEGS[:4] + [{'platform': [True, '0', '0'],
                                  'base': ['0', '0', '0']}]},
            {'legs': LEGS[:4] + [{'platform': ['1/0', '0', '0'],
                                  'base': ['0', '0', '0']}]},
            {'legs': LEGS[:4] + [{'platform': ['0', '0', '0', '0'],
                                  'base': ['0', '0', '0']}]},
            {'legs': LEGS[:4] + [LEGS[0]]},
        ]
        for data in bad:
            with self.assertRaises(ValueError):
                parse_design(data, 'test')

    def test_message(self):
        data = {'legs': LEGS[:4] + [{'platform': ['x', '0', '0'],
                                     'base': ['0', '0', '0']}]}
        with self.assertRaises(ValueError) as cm:
            parse_design(data, 'file.json')
        self.assertIn('file.json: legs[4].platform[0]', str(cm.exception))

    def test_resolve(self):
        self.assertIn('thm4_item1', bundled_designs())
        found = resolve('thm4_item1')
        self.assertTrue(found.endswith(path.join('designs',
                                                 'thm4_item1.json')))
        self.assertEqual(found, resolve('somewhere/thm4_item1.json'))
        with self.assertRaises(ValueError):
            resolve('no_such_design')
        self.assertEqual('thm4.1', read_design('thm4_item1').case)

    def test_malformed_json(self):
        with TemporaryDirectory() as tmp:
            filename = path.join(tmp, 'broken.json')
            with open(filename, 'w', encoding='utf-8') as f:
                f.write('{"legs": [')
            with self.assertRaises(ValueError):
                read_design(filename)
            code, _, err = run('classify', filename)
            self.assertEqual(INPUT_ERROR, code)
            self.assertIn('broken.json', err)


class ClassifyCommandUnitTests(TestCase):

    def test_spherical(self):
        code, out, _ = run('classify', 'thm4_item1')
        self.assertEqual(SUCCESS, code)
        self.assertEqual('Theorem 4, item 1; spherical center M3=M4=M5; β=1',
                         out.splitlines()[0])

    def test_translational(self):
        code, out, _ = run('classify', 'congruent')
        self.assertEqual(SUCCESS, code)
        self.assertEqual('Theorem 2; β=−1', out.splitlines()[0])

    def test_no_case(self):
        code, out, _ = run('classify', 'generic')
        self.assertEqual(NEGATIVE, code)
        self.assertEqual('no case', out.splitlines()[0])

    def test_json(self):
        code, out, _ = run('classify', 'thm6_item3', '--format', 'json')
        self.assertEqual(SUCCESS, code)
        data = json.loads(out)
        self.assertEqual('hexapod', data['type'])
        self.assertEqual('thm6.3', data['cases'][0]['label'])

    def test_wrong_leg_count(self):
        with TemporaryDirectory() as tmp:
            filename = path.join(tmp, 'tetrapod.json')
            with open(filename, 'w', encoding='utf-8') as f:
                json.dump({'schema': 1, 'legs': LEGS[:4]}, f)
            code, _, err = run('classify', filename)
        self.assertEqual(INPUT_ERROR, code)
        self.assertIn('5 or 6 legs', err)


class ReproduceCommandUnitTests(TestCase):

    def test_unknown(self):
        code, _, err = run('reproduce', 'sec9.9')
        self.assertEqual(INPUT_ERROR, code)
        self.assertIn('registry', err)
        self.assertEqual(INPUT_ERROR, run('reproduce')[0])

    def test_reproduce(self):
        code, out, _ = run('reproduce', 'sec4.1-case1')
        self.assertEqual(SUCCESS, code)
        self.assertIn('sec4.1-case1', out)
        code, out, _ = run('reproduce', 'sec4.1-case1', '--format', 'json')
        self.assertEqual(SUCCESS, code)
        self.assertEqual('pass', json.loads(out)[0]['status'])

    def test_mismatch_code(self):
        self.assertNotEqual(MISMATCH, run('reproduce', 'sec4.1-case1')[0])

    def test_cross_resultant_flag(self):
        for flag in ('--with-footnote7', '--with-cross-resultant'):
            code, _, _ = run('reproduce', 'sec4.1-case1', flag)
            self.assertEqual(SUCCESS, code, flag)

    def test_slow_entries(self):
        def passing(rep, **_):
            rep.check('ran', True)

        def failing(rep, **_):
            rep.check('ran', False)

        with patch.dict(REGISTRY, clear=True), \
                patch.dict(environ, {SLOW_ENV: '0'}):
            register('fast-entry', 'fast')(passing)
            register('slow-entry', 'slow', slow=True)(failing)
            code, out, _ = run('reproduce', 'slow-entry', '--format', 'json')
            self.assertEqual(MISMATCH, code)
            self.assertEqual('fail', json.loads(out)[0]['status'])
            code, out, _ = run('reproduce', '--all', '--skip-slow',
                               '--format', 'json')
            self.assertEqual(SUCCESS, code)
            self.assertEqual(['fast-entry'],
                             [r['id'] for r in json.loads(out)])
            code, out, _ = run('reproduce', '--all')
            self.assertEqual(MISMATCH, code)
            self.assertIn('slow-entry: ran failed', out)


class VerifyMotionCommandUnitTests(TestCase):

    def test_spherical(self):
        code, out, _ = run('verify-motion', 'thm4_item1', '--samples', '20',
                           '--format', 'json')
        self.assertEqual(SUCCESS, code)
        data = json.loads(out)
        self.assertTrue(data['verified'])
        self.assertEqual(20, data['samples'])
        self.assertLess(data['max_deviation'], 1e-9)
        self.assertEqual(20, sum(data['mobility'].values()))

    def test_csv(self):
        with TemporaryDirectory() as tmp:
            filename = path.join(tmp, 'samples.csv')
            code, out, _ = run('verify-motion', 'congruent', '--samples',
                               '9', '--csv', filename)
            with open(filename, encoding='utf-8') as f:
                lines = f.read().splitlines()
        self.assertEqual(SUCCESS, code)
        self.assertIn('verified', out)
        self.assertEqual(10, len(lines))
        self.assertTrue(lines[0].startswith('u,v,e0'))

    def test_case_mismatch(self):
        code, _, err = run('verify-motion', 'thm4_item1', '--case', 'thm2')
        self.assertEqual(INPUT_ERROR, code)
        self.assertIn('case mismatch', err)

    def test_no_case(self):
        self.assertEqual(NEGATIVE, run('verify-motion', 'generic')[0])

    def test_impossible_radii(self):
        design = read_design('thm3_item2').with_radii(['1/100'] * 5)
        with TemporaryDirectory() as tmp:
            filename = path.join(tmp, 'tight.json')
            with open(filename, 'w', encoding='utf-8') as f:
                json.dump(design.to_dict(), f)
            code, _, _ = run('verify-motion', filename, '--samples', '10')
        self.assertEqual(INPUT_ERROR, code)


class SingularCommandUnitTests(TestCase):

    def test_singular(self):
        code, out, _ = run('singular', 'pencil')
        self.assertEqual(NEGATIVE, code)
        self.assertEqual('singular (probabilistic, 20 samples)', out.strip())

    def test_regular(self):
        code, out, _ = run('singular', 'generic', '--seed', '7')
        self.assertEqual(SUCCESS, code)
        self.assertTrue(out.startswith('regular, witness pose e = ('))
        code, out, _ = run('singular', 'generic', '--format', 'json')
        self.assertEqual('regular', json.loads(out)['status'])
        self.assertEqual(8, len(json.loads(out)['witness']))
