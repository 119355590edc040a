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

"""designs with 2-dimensional self-motions

Every case is matched exactly over the rationals by brute force over all
relabelings of the legs combined with the exchange of platform and base.
Matches are recorded together with the relabeling used and a witness
(coincident points, carrier lines, axis direction, spherical center).
"""

from fractions import Fraction
from itertools import combinations
from logging import getLogger

from prettyclass import prettyclass

from .bonds.beta import BetaClass
from .geometry import PodDesign, SingularityVerdict, SAMPLES, \
    affine_dimension, architecturally_singular, collinear, \
    coincidence_collinearity_profile, congruent, fit_map, partition
from .tools import relabelings
from .tools.algebra import dot, sub
from .tools.constant import text

_logger = getLogger(__name__)

PENTAPOD_CASES = 'thm2', 'thm3.1', 'thm3.2', 'thm4.1', 'thm4.2a', \
    'thm4.2b', 'thm4.3', 'alpha', 'beta', 'gamma'
HEXAPOD_CASES = 'thm6.1', 'thm6.2', 'thm6.3', 'thm6.4', 'thm6.5', 'thm6.6'
CASES = PENTAPOD_CASES + HEXAPOD_CASES
HIGHER = 'cor1b.i', 'cor1b.ii', 'cor1b.iii'

CASE_TITLES = {
    'thm2': 'Theorem 2',
    'thm3.1': 'Theorem 3, item 1',
    'thm3.2': 'Theorem 3, item 2',
    'thm4.1': 'Theorem 4, item 1',
    'thm4.2a': 'Theorem 4, item 2(a)',
    'thm4.2b': 'Theorem 4, item 2(b)',
    'thm4.3': 'Theorem 4, item 3',
    'alpha': 'collinear base, case (α)',
    'beta': 'collinear base, case (β)',
    'gamma': 'collinear base, case (γ)',
    'thm6.1': 'Theorem 6, item 1',
    'thm6.2': 'Theorem 6, item 2',
    'thm6.3': 'Theorem 6, item 3',
    'thm6.4': 'Theorem 6, item 4',
    'thm6.5': 'Theorem 6, item 5',
    'thm6.6': 'Theorem 6, item 6',
    'cor1b.i': 'Corollary 1b, item (i)',
    'cor1b.ii': 'Corollary 1b, item (ii)',
    'cor1b.iii': 'Corollary 1b, item (iii)',
}

TRANSLATIONAL = 'thm2', 'thm3.1', 'thm6.1'
SCHOENFLIES = 'thm3.2',
CASE_BETA = dict(
    [(c, -1) for c in TRANSLATIONAL] + [(c, 0) for c in SCHOENFLIES] +
    [(c, 1) for c in CASES if c not in TRANSLATIONAL + SCHOENFLIES])


def _beta_text(value):
    return 'β=none' if value is None else f"β={value}".replace('-', '−')


def _plain(value):
    if isinstance(value, Fraction):
        return text(value)
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    return value


@prettyclass
class CaseMatch:
    """a matched case

    :param label: case label, e.g. `thm4.1`
    :param permutation: 0-based original leg of each relabeled leg
    :param swapped: True if platform and base were exchanged
    :param witness: dict of the geometric witnesses in original labels
    """

    def __init__(self, label, permutation, swapped, witness=None):
        self.label = label
        self.permutation = tuple(permutation)
        self.swapped = swapped
        self.witness = witness or {}

    @property
    def title(self):
        return CASE_TITLES[self.label]

    @property
    def beta(self):
        return BetaClass(CASE_BETA.get(self.label), self.title)

    @property
    def spherical(self):
        return 'center' in self.witness

    def text(self):
        parts = [self.title]
        if 'summary' in self.witness:
            parts.append(self.witness['summary'])
        parts.append(_beta_text(CASE_BETA.get(self.label)))
        return '; '.join(parts)

    def to_dict(self):
        return {'label': self.label,
                'title': self.title,
                'permutation': [k + 1 for k in self.permutation],
                'swapped': self.swapped,
                'beta': CASE_BETA.get(self.label),
                'witness': _plain(self.witness)}


@prettyclass
class NecessaryConditions:
    """necessary conditions of a pentapod with a 2-dimensional self-motion

    :param conditions: tuple of the holding conditions among
        `a` (similar), `b` (planar affine), `c` (p collinear platform
        points and coincident remaining base points) and `d` (parallel
        lines on both sides)
    :param p: smallest p of condition `c` or None
    :param witnesses: dict of witnesses per condition
    """

    def __init__(self, conditions, p=None, witnesses=None):
        self.conditions = tuple(conditions)
        self.p = p
        self.witnesses = witnesses or {}

    def __contains__(self, item):
        return item in self.conditions

    def __bool__(self):
        return bool(self.conditions)

    def to_dict(self):
        return {'conditions': list(self.conditions), 'p': self.p,
                'witnesses': _plain(self.witnesses)}


@prettyclass
class ClassificationReport:
    """outcome of :func:`classify`

    :param design: the classified :class:`PodDesign`
    :param cases: list of :class:`CaseMatch`
    :param necessary: :class:`NecessaryConditions` (pentapods only)
    :param singularity: :class:`SingularityVerdict`
    :param higher: labels of designs with self-motions of dimension > 2
    :param notes: list of remarks
    """

    def __init__(self, design, cases=(), necessary=None, singularity=None,
                 higher=(), notes=()):
        self.design = design
        self.cases = list(cases)
        self.necessary = necessary
        self.singularity = singularity
        self.higher = tuple(higher)
        self.notes = list(notes)

    @property
    def labels(self):
        return tuple(c.label for c in self.cases)

    @property
    def label(self):
        return self.cases[0].label if self.cases else None

    @property
    def p(self):
        return self.necessary.p if self.necessary else None

    @property
    def singular(self):
        return self.singularity is not None and self.singularity.singular

    @property
    def mobility2(self):
        """a matched case that confirms a 2-dimensional self-motion"""
        return bool(self.cases) and not self.singular and not self.higher

    @property
    def beta(self):
        if not self.cases:
            return BetaClass(None, 'no case')
        return self.cases[0].beta

    def case(self, label):
        for c in self.cases:
            if c.label == label:
                return c
        msg = f"case {label!r} not matched, matched are {self.labels}"
        raise ValueError(msg)

    def text(self):
        lines = [c.text() for c in self.cases] or ['no case']
        if self.higher:
            lines.append('self-motion of dimension > 2: ' +
                         ', '.join(CASE_TITLES[h] for h in self.higher))
        if self.singularity is not None:
            status = self.singularity.status
            if self.singularity.singular and self.singularity.samples:
                status += f" (probabilistic, {self.singularity.samples} " \
                          f"samples)"
            lines.append(f"architectural singularity: {status}")
        if self.necessary is not None:
            cond = ', '.join(self.necessary.conditions) or 'none'
            p = '' if self.p is None else f" (p={self.p})"
            lines.append(f"necessary conditions: {cond}{p}")
        lines.extend(self.notes)
        return '\n'.join(lines)

    def to_dict(self):
        singularity = None
        if self.singularity is not None:
            singularity = {'status': self.singularity.status,
                           'samples': self.singularity.samples,
                           'rank': self.singularity.rank}
        return {'design': self.design.name,
                'type': self.design.type,
                'cases': [c.to_dict() for c in self.cases],
                'mobility2': self.mobility2,
                'beta': self.beta.value,
                'p': self.p,
                'higher': list(self.higher),
                'singularity': singularity,
                'necessary':
                    self.necessary.to_dict() if self.necessary else None,
                'notes': list(self.notes)}


# --- relabeled frames ---

class _Frame:
    """design seen under one relabeling and optional swap"""

    def __init__(self, platform, base, perm, swapped):
        if swapped:
            platform, base = base, platform
        self.m = tuple(platform[k] for k in perm)
        self.M = tuple(base[k] for k in perm)
        self.perm = tuple(perm)
        self.swapped = swapped

    def name(self, legs, side='base', sep='='):
        letter = 'M' if (side == 'base') != self.swapped else 'm'
        return sep.join(f"{letter}{k + 1}"
                        for k in sorted(self.perm[i] for i in legs))

    def legs(self, legs):
        return tuple(sorted(self.perm[i] for i in legs))

    def pin(self, platform_point, base_point):
        """center in original coordinates"""
        if self.swapped:
            return {'platform': base_point, 'base': platform_point}
        return {'platform': platform_point, 'base': base_point}

    def spherical(self, pinned, at, **extra):
        """witness pinning frame platform legs at frame base legs"""
        witness = {
            'center': self.pin(self.m[pinned[0]], self.M[at[0]]),
            'pinned': self.name(pinned, 'platform'),
            'at': self.name(at, 'base'),
            'summary': f"spherical center {self.name(at, 'base')}"}
        witness.update(extra)
        return witness


def _equal(points, legs):
    first = points[legs[0]]
    return all(points[k] == first for k in legs[1:])


def _block(points, legs):
    """the legs form a complete block of coincident points"""
    others = [k for k in range(len(points)) if k not in legs]
    return _equal(points, legs) and \
        all(points[k] != points[legs[0]] for k in others)


def _distinct(points, legs):
    chosen = [points[k] for k in legs]
    return len(set(chosen)) == len(chosen)


def _line(points, legs):
    """legs collinear on a line spanned by at least two distinct points"""
    chosen = [points[k] for k in legs]
    return len(set(chosen)) >= 2 and collinear(*chosen)


def _max_block(points):
    return max(len(b) for b in partition(points))


def _point_on_line(points, legs, scale=2):
    """a point of the carrier line of the given legs"""
    distinct = []
    for k in legs:
        if points[k] not in distinct:
            distinct.append(points[k])
    p, q = distinct[:2]
    return tuple(a + scale * (b - a) for a, b in zip(p, q))


# --- pentapod cases on a frame ---

def _thm4_1(f):
    m, M = f.m, f.M
    if not _block(M, (2, 3, 4)) or m[0] == m[1]:
        return None
    alternatives = [f.pin(m[0], M[2]), f.pin(m[1], M[2])]
    return f.spherical((0,), (2, 3, 4), alternatives=alternatives)


def _thm4_2a(f):
    m, M = f.m, f.M
    if not _block(M, (3, 4)) or _max_block(M) > 2:
        return None
    if not _block(m, (1, 2)):
        return None
    return f.spherical((1, 2), (3, 4))


def _thm4_2b(f):
    m, M = f.m, f.M
    if not _block(M, (3, 4)) or _max_block(M) > 2:
        return None
    if not _distinct(m, (0, 1, 2)) or not collinear(m[0], m[1], m[2]):
        return None
    if not _distinct(M, (1, 2, 3)) or not collinear(M[1], M[2], M[3]):
        return None
    return f.spherical((0,), (3, 4),
                       platform_line=f.name((0, 1, 2), 'platform', ','),
                       base_line=f.name((1, 2, 3, 4), 'base', ','))


def _thm4_3(f):
    m, M = f.m, f.M
    if _max_block(M) > 2 or not _block(M, (4,)):
        return None
    if not _line(m, (0, 1, 2, 3)) or not _line(M, (1, 2, 3, 4)):
        return None
    return f.spherical((0,), (4,),
                       platform_line=f.name((0, 1, 2, 3), 'platform', ','),
                       base_line=f.name((1, 2, 3, 4), 'base', ','))


_MAIN = (('thm4.1', _thm4_1), ('thm4.2a', _thm4_2a),
         ('thm4.2b', _thm4_2b), ('thm4.3', _thm4_3))


def _on_carrier(f, legs, at, condition):
    """spherical witness with center on the carrier line of frame legs"""
    g = _point_on_line(f.m, legs)
    witness = {
        'center': f.pin(g, f.M[at[0]]),
        'pinned': 'point of ' + f.name(legs, 'platform', ','),
        'at': f.name(at, 'base'),
        'condition': condition,
        'summary': f"spherical center {f.name(at, 'base')} on the "
                   f"carrier line of {f.name(legs, 'platform', ',')}"}
    return witness


def _alpha(f):
    m, M = f.m, f.M
    if not _line(M, range(5)) or not _block(M, (2, 3, 4)) or m[0] == m[1]:
        return None
    condition = f"{f.name((2, 3, 4))} on the line spanned by " \
                f"{f.name((0, 1), 'platform', ',')}"
    return _on_carrier(f, (0, 1), (2, 3, 4), condition)


def _beta(f):
    m, M = f.m, f.M
    if not _line(M, range(5)) or not _block(M, (3, 4)) or _max_block(M) > 2:
        return None
    if not _distinct(m, (0, 1, 2)) or not collinear(m[0], m[1], m[2]):
        return None
    condition = f"{f.name((3, 4))} on the carrier line of " \
                f"{f.name((0, 1, 2), 'platform', ',')}"
    return _on_carrier(f, (0, 1, 2), (3, 4), condition)


def _gamma(f):
    m, M = f.m, f.M
    if not _line(M, range(5)) or _max_block(M) > 2 or not _block(M, (4,)):
        return None
    if not _line(m, (0, 1, 2, 3)):
        return None
    condition = f"{f.name((4,))} on the carrier line of " \
                f"{f.name((0, 1, 2, 3), 'platform', ',')}"
    return _on_carrier(f, (0, 1, 2, 3), (4,), condition)


_SIDE = (('alpha', _alpha), ('beta', _beta), ('gamma', _gamma))


# --- hexapod cases on a frame ---

def _thm6_2(f):
    m, M = f.m, f.M
    if not _distinct(m, (0, 1, 2, 3, 4)) or not _line(m, (0, 1, 2, 3, 4)):
        return None
    if not _line(M, (1, 2, 3, 4, 5)):
        return None
    return f.spherical((0,), (5,))


def _thm6_3(f):
    m, M = f.m, f.M
    if not _block(m, (0, 1)) or not _line(m, (0, 2, 3, 4)):
        return None
    if not _line(M, (2, 3, 4, 5)):
        return None
    return f.spherical((0, 1), (5,))


def _thm6_4(f):
    m, M = f.m, f.M
    if not _block(m, (0, 1, 2)) or not _distinct(m, (0, 3, 4)):
        return None
    if not collinear(m[0], m[3], m[4]) or not _line(M, (3, 4, 5)):
        return None
    return f.spherical((0, 1, 2), (5,))


def _thm6_5(f):
    m, M = f.m, f.M
    if not _block(m, (0, 1)) or not _distinct(m, (0, 2, 3)):
        return None
    if not collinear(m[0], m[2], m[3]) or not _equal(M, (4, 5)):
        return None
    if not _distinct(M, (2, 3, 4)) or not collinear(M[2], M[3], M[4]):
        return None
    return f.spherical((0, 1), (4, 5))


def _thm6_6(f):
    m, M = f.m, f.M
    if not _block(m, (0, 1, 2)) or not _equal(M, (4, 5)):
        return None
    return f.spherical((0, 1, 2), (4, 5))


_HEXAPOD = (('thm6.2', _thm6_2), ('thm6.3', _thm6_3), ('thm6.4', _thm6_4),
            ('thm6.5', _thm6_5), ('thm6.6', _thm6_6))


def _search(design, predicates):
    """first match of every predicate over all relabelings and swaps"""
    platform, base = design.platform, design.base
    found = {}
    for perm, swapped in relabelings(design.n):
        frame = _Frame(platform, base, perm, swapped)
        for label, predicate in predicates:
            if label in found:
                continue
            witness = predicate(frame)
            if witness is not None:
                _logger.debug(f"match {label} with permutation "
                              f"{[k + 1 for k in perm]}, swapped {swapped}")
                found[label] = CaseMatch(label, perm, swapped, witness)
        if len(found) == len(predicates):
            break
    return [found[label] for label, _ in predicates if label in found]


# --- checks ---

def _check(design, n):
    if not isinstance(design, PodDesign):
        design = PodDesign(design)
    if design.n != n:
        kind = {5: 'pentapod', 6: 'hexapod'}[n]
        msg = f"{kind} requires {n} legs, got {design.n}"
        raise ValueError(msg)
    if design.symbolic:
        raise ValueError("classification requires rational anchors")
    return design


def _sq(v):
    return dot(v, v)


def _restriction_congruent(design, legs):
    platform, base = design.platform, design.base
    return all(_sq(sub(platform[i], platform[j])) ==
               _sq(sub(base[i], base[j]))
               for i, j in combinations(legs, 2))


def _names(legs, letter):
    return ','.join(f"{letter}{k + 1}" for k in sorted(legs))


def _schoenflies(design, profile):
    """Schönflies witness of planar affine designs with parallel lines"""
    for triple, pair in profile['parallel']:
        if not _restriction_congruent(design, triple) or \
                not _restriction_congruent(design, pair):
            continue
        i, j = next((i, j) for i, j in combinations(triple, 2)
                    if design.base[i] != design.base[j])
        witness = {
            'axis': sub(design.base[j], design.base[i]),
            'platform_axis': sub(design.platform[j], design.platform[i]),
            'g': triple, 'h': pair,
            'summary': f"Schönflies axis parallel to "
                       f"g = {_names(triple, 'M')} and "
                       f"h = {_names(pair, 'M')}"}
        return CaseMatch('thm3.2', range(design.n), False, witness)
    return None


def _four_collinear(points):
    return any(collinear(*(points[k] for k in legs))
               for legs in combinations(range(len(points)), 4))


def _p_condition(design):
    """smallest p with p collinear points and coincident remaining points"""
    n, platform, base = design.n, design.platform, design.base
    sides = ('m', 'M', platform, base), ('M', 'm', base, platform)
    for p in range(2, n + 1):
        for line, equal, side, other in sides:
            for legs in combinations(range(n), p):
                rest = tuple(k for k in range(n) if k not in legs)
                if not collinear(*(side[k] for k in legs)):
                    continue
                if rest and not _equal(other, rest):
                    continue
                return p, {'collinear': _names(legs, line),
                           'equal': '='.join(f"{equal}{k + 1}"
                                             for k in rest)}
    return None, None


def necessary_conditions_thm1a(design):
    """necessary conditions for a 2-dimensional self-motion

    :param design: pentapod :class:`PodDesign` with rational anchors
    :return: :class:`NecessaryConditions`

    Tests exactly (a) similarity of platform and base, (b) planar
    platform and base related by an affinity, (c) p collinear platform
    points with the remaining base points coincident for the smallest
    p (under relabeling and exchange of platform and base) and (d) three
    points on a line parallel to the line of the other two points on
    both sides.
    """
    design = _check(design, 5)
    platform, base = design.platform, design.base
    dims = affine_dimension(platform), affine_dimension(base)
    conditions, witnesses = [], {}
    if min(dims) >= 2 and dims[0] == dims[1]:
        if fit_map(platform, base, 'similarity') is not None:
            conditions.append('a')
            witnesses['a'] = {'map': 'similarity'}
        if dims == (2, 2):
            fitted = fit_map(platform, base, 'affinity')
            if fitted is not None:
                conditions.append('b')
                witnesses['b'] = {'map': 'affinity'}
    p, witness = _p_condition(design)
    if p is not None:
        conditions.append('c')
        witnesses['c'] = dict(witness, p=p)
    splits = coincidence_collinearity_profile(design)['parallel']
    if splits:
        conditions.append('d')
        witnesses['d'] = [{'g': _names(t, 'M'), 'h': _names(s, 'M')}
                          for t, s in splits]
    return NecessaryConditions(conditions, p, witnesses)


def higher_dimensional(design):
    """labels of designs with self-motions of dimension > 2"""
    n = design.n
    platform, base = design.platform, design.base
    found = []
    for side, other in ((platform, base), (base, platform)):
        for legs in combinations(range(n), 3):
            rest = tuple(k for k in range(n) if k not in legs)
            if _equal(side, legs) and _equal(other, rest):
                found.append('cor1b.i')
                break
    if any(len(b) >= 4 for side in (platform, base)
           for b in partition(side)):
        found.append('cor1b.ii')
    # a projectivity of the line is fixed by three distinct points
    if affine_dimension(platform) == 1 and affine_dimension(base) == 1 and \
            len(set(platform)) >= 3 and len(set(base)) >= 3 and \
            fit_map(platform, base, 'projectivity-on-line') is not None:
        found.append('cor1b.iii')
    return tuple(h for h in HIGHER if h in found)


def collinear_base_side_cases(design):
    """pentapods with all base points collinear

    :param design: pentapod :class:`PodDesign`
    :return: list of :class:`CaseMatch` with labels `alpha`, `beta` or
        `gamma`, empty if none matches

    One side has to be collinear while the other is not. Each witness
    carries the condition on the spherical center.
    """
    design = _check(design, 5)
    platform, base = design.platform, design.base
    if collinear(*platform) == collinear(*base):
        return []
    return _search(design, _SIDE)


def _singularity(design, samples, seed, planar_affine):
    if planar_affine:
        singular = _four_collinear(design.platform) or \
            _four_collinear(design.base)
        return SingularityVerdict('singular' if singular else 'regular', 0)
    return architecturally_singular(design, samples, seed)


def classify_pentapod(design, samples=SAMPLES, seed=None):
    """all cases of 2-dimensional self-motions matching a pentapod

    :param design: pentapod :class:`PodDesign` with rational anchors
    :param samples: number of poses of the singularity test
    :param seed: seed of the singularity test
    :return: :class:`ClassificationReport`

    Planar affine designs are architecturally singular iff four anchor
    points of one side are collinear, all others are tested by
    :func:`architecturally_singular`.
    """
    design = _check(design, 5)
    platform, base = design.platform, design.base
    necessary = necessary_conditions_thm1a(design)
    higher = higher_dimensional(design)
    singularity = _singularity(design, samples, seed, 'b' in necessary)
    cases, notes = [], []
    platform_line, base_line = collinear(*platform), collinear(*base)
    if platform_line and base_line:
        notes.append('platform and base are collinear: only the '
                     'projectivity of Corollary 1b, item (iii) is tested')
    elif platform_line or base_line:
        cases = collinear_base_side_cases(design)
    else:
        dims = affine_dimension(platform), affine_dimension(base)
        if congruent(platform, base):
            if dims == (2, 2):
                cases.append(CaseMatch('thm3.1', range(5), False,
                                       {'map': 'congruence'}))
            else:
                cases.append(CaseMatch('thm2', range(5), False,
                                       {'map': 'congruence'}))
        if 'b' in necessary:
            profile = coincidence_collinearity_profile(design)
            match = _schoenflies(design, profile)
            if match is not None:
                cases.append(match)
        cases.extend(_search(design, _MAIN))
    for c in cases:
        _logger.debug(f"{design.name or 'design'}: {c.text()}")
    return ClassificationReport(design, cases, necessary, singularity,
                                higher, notes)


def classify_hexapod(design, samples=SAMPLES, seed=None):
    """all cases of 2-dimensional self-motions matching a hexapod

    :param design: hexapod :class:`PodDesign` with rational anchors
    :param samples: number of poses of the singularity test
    :param seed: seed of the singularity test
    :return: :class:`ClassificationReport`; spherical cases carry the
        coincidence of the pinned platform and base point
    """
    design = _check(design, 6)
    singularity = architecturally_singular(design, samples, seed)
    cases = []
    if congruent(design.platform, design.base):
        cases.append(CaseMatch('thm6.1', range(6), False,
                               {'map': 'congruence'}))
    cases.extend(_search(design, _HEXAPOD))
    return ClassificationReport(design, cases, None, singularity)


def classify(design, samples=SAMPLES, seed=None):
    """classify a pentapod or hexapod

    >>> from pentapods import PodDesign
    >>> legs = [((0, 0, 0), (1, 2, 0)), ((1, 0, 0), (3, 1, 2)),
    ...         ((2, 1, 1), (0, 0, 0)), ((0, 3, 1), (0, 0, 0)),
    ...         ((1, 1, 4), (0, 0, 0))]
    >>> classify(PodDesign(legs)).label
    'thm4.1'

    """
    if not isinstance(design, PodDesign):
        design = PodDesign(design)
    if design.n == 5:
        return classify_pentapod(design, samples, seed)
    if design.n == 6:
        return classify_hexapod(design, samples, seed)
    msg = f"classification requires 5 or 6 legs, got {design.n}"
    raise ValueError(msg)
