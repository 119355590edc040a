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

"""exact geometric predicates on anchor point configurations

All predicates work over the rationals without any tolerance, with the
single exception of float input to :func:`spherical_rpr_self_motion`.
"""

from fractions import Fraction
from itertools import combinations, permutations
from logging import getLogger
from random import Random

from prettyclass import prettyclass

from .exactalg import MultiPoly, isqrt_fraction, poly
from .study import StudyPoint, rotation_translation
from .tools.algebra import cross, determinant, dot, mat_mul, nullspace, \
    rank, solve, sub, transpose
from .tools.constant import rational, text

_logger = getLogger(__name__)

LEG_COUNTS = 3, 4, 5, 6
SAMPLES = 20
SEED = 20131001
CHORD_TOL = 1e-9
PERTURBATION = Fraction(1, 1000)
KINDS = 'affinity', 'similarity', 'congruence', 'reflection-congruence', \
    'projectivity-on-line'

_random = Random(SEED)


# --- pod design ---

def _coordinate(x):
    if isinstance(x, MultiPoly):
        return x.constant() if x.is_constant else x
    if isinstance(x, str) and any(ch.isalpha() for ch in x):
        return _coordinate(poly(x))
    return rational(x)


def _text(x):
    return str(x) if isinstance(x, MultiPoly) else text(x)


def point(p):
    """exact 3-point; planar 2-points get z = 0"""
    p = tuple(p)
    if len(p) == 2:
        p = p + (0,)
    if len(p) != 3:
        raise ValueError(f"2 or 3 coordinates required, got {len(p)}")
    return tuple(_coordinate(x) for x in p)


@prettyclass
class Leg:
    """leg joining platform anchor **platform** to base anchor **base**"""

    def __init__(self, platform, base, radius2=None):
        self.platform = point(platform)
        self.base = point(base)
        self.radius2 = None if radius2 is None else _coordinate(radius2)

    def __iter__(self):
        return iter((self.platform, self.base, self.radius2))

    def swapped(self):
        return Leg(self.base, self.platform, self.radius2)


@prettyclass
class PodDesign:
    """pentapod or hexapod design

    :param legs: sequence of :class:`Leg` or tuples
        (platform anchor, base anchor[, squared radius])
    :param name: optional name
    :param case: optional case label the design is meant to realize

    Coordinates are exact rationals or, for symbolic derivations,
    polynomials in design symbols.

    >>> d = PodDesign([((0, 0), (0, 0)), ((1, 0), (1, 0)), ((0, 1), (0, 1))])
    >>> d.n
    3

    """

    def __init__(self, legs, name=None, case=None):
        legs = tuple(leg if isinstance(leg, Leg) else Leg(*leg)
                     for leg in legs)
        if len(legs) not in LEG_COUNTS:
            msg = f"design requires 3 to 6 legs, got {len(legs)}"
            raise ValueError(msg)
        for (i, a), (j, b) in combinations(enumerate(legs, 1), 2):
            if a.platform == b.platform and a.base == b.base:
                msg = f"legs {i} and {j} coincide"
                raise ValueError(msg)
        for i, leg in enumerate(legs, 1):
            r2 = leg.radius2
            if isinstance(r2, Fraction) and r2 <= 0:
                msg = f"squared radius of leg {i} must be positive, " \
                      f"got {text(r2)}"
                raise ValueError(msg)
        self.legs = legs
        self.name = name
        self.case = case

    def __len__(self):
        return len(self.legs)

    def __iter__(self):
        return iter(self.legs)

    def __eq__(self, other):
        if not isinstance(other, PodDesign):
            return NotImplemented
        return [tuple(leg) for leg in self.legs] == \
            [tuple(leg) for leg in other.legs]

    @property
    def n(self):
        return len(self.legs)

    @property
    def type(self):
        return {5: 'pentapod', 6: 'hexapod'}.get(self.n, f"{self.n}-pod")

    @property
    def platform(self):
        return tuple(leg.platform for leg in self.legs)

    @property
    def base(self):
        return tuple(leg.base for leg in self.legs)

    @property
    def radii(self):
        return tuple(leg.radius2 for leg in self.legs)

    @property
    def symbolic(self):
        return any(isinstance(x, MultiPoly)
                   for leg in self.legs
                   for x in leg.platform + leg.base + (leg.radius2,))

    def swapped(self):
        """exchange platform and base"""
        return PodDesign([leg.swapped() for leg in self.legs],
                         self.name, self.case)

    def relabeled(self, perm):
        """new leg k is old leg perm[k] (0-based)"""
        return PodDesign([self.legs[k] for k in perm], self.name, self.case)

    def with_radii(self, radii):
        return PodDesign([Leg(m, M, r) for (m, M, _), r
                          in zip(self.legs, radii)], self.name, self.case)

    def perturbed(self, leg, side='platform', axis=0, delta=PERTURBATION):
        """move one anchor coordinate (leg 1-based, side, axis 0..2)"""
        legs = list(self.legs)
        m, M, r2 = legs[leg - 1]
        target = list(m if side == 'platform' else M)
        target[axis] = target[axis] + delta
        legs[leg - 1] = Leg(target, M, r2) if side == 'platform' \
            else Leg(m, target, r2)
        return PodDesign(legs, self.name, None)

    def to_dict(self):
        legs = []
        for leg in self.legs:
            item = {'platform': [_text(x) for x in leg.platform],
                    'base': [_text(x) for x in leg.base]}
            if leg.radius2 is not None:
                item['radius2'] = _text(leg.radius2)
            legs.append(item)
        data = {'schema': 1, 'type': self.type}
        if self.name:
            data['name'] = self.name
        if self.case:
            data['case'] = self.case
        data['legs'] = legs
        return data

    @classmethod
    def from_dict(cls, data):
        legs = [(leg['platform'], leg['base'], leg.get('radius2'))
                for leg in data['legs']]
        return cls(legs, data.get('name'), data.get('case'))


# --- elementary predicates ---

def is_zero_vector(v):
    return all(x == 0 for x in v)


def collinear(*points):
    """all points on a common line"""
    distinct = _distinct(points)
    if len(distinct) < 3:
        return True
    p, q = distinct[0], distinct[1]
    d = sub(q, p)
    return all(is_zero_vector(cross(d, sub(r, p))) for r in distinct[2:])


def coplanar(*points):
    return affine_dimension(points) <= 2


def affine_dimension(points):
    """dimension of the affine hull (-1 for no points)"""
    points = list(points)
    if not points:
        return -1
    p0 = points[0]
    return rank([sub(p, p0) for p in points[1:]]) if len(points) > 1 else 0


def _distinct(points):
    distinct = []
    for p in points:
        if p not in distinct:
            distinct.append(p)
    return distinct


def parallel(u, v):
    return is_zero_vector(cross(u, v))


def partition(points):
    """blocks of equal points as tuples of 0-based indices"""
    blocks = {}
    for i, p in enumerate(points):
        blocks.setdefault(p, []).append(i)
    return tuple(tuple(b) for b in blocks.values())


def collinear_subsets(points, minimum=3):
    """maximal index sets of collinear points spanning a line"""
    points = list(points)
    found = []
    for i, j in combinations(range(len(points)), 2):
        if points[i] == points[j]:
            continue
        d = sub(points[j], points[i])
        line = tuple(k for k, p in enumerate(points)
                     if is_zero_vector(cross(d, sub(p, points[i]))))
        if len(line) >= minimum and line not in found:
            found.append(line)
    return tuple(sorted(found))


def parallel_line_splits(points):
    """splits (triple on g, pair on h) with distinct parallel g and h

    The pair must span h, the triple must span g.
    """
    points = list(points)
    splits = []
    for triple in combinations(range(len(points)), 3):
        pair = tuple(k for k in range(len(points)) if k not in triple)
        if len(pair) != 2:
            continue
        t = [points[k] for k in triple]
        h0, h1 = points[pair[0]], points[pair[1]]
        if h0 == h1 or len(_distinct(t)) < 2 or not collinear(*t):
            continue
        g0, g1 = _distinct(t)[:2]
        dg, dh = sub(g1, g0), sub(h1, h0)
        if not parallel(dg, dh):
            continue
        if parallel(dg, sub(h0, g0)):
            continue
        splits.append((triple, pair))
    return splits


@prettyclass
class ConfigurationProfile:
    """coincidences and collinearities of one side of a design"""

    def __init__(self, blocks, collinear, planar, all_collinear,
                 parallel_lines):
        self.blocks = blocks
        self.collinear = collinear
        self.planar = planar
        self.all_collinear = all_collinear
        self.parallel_lines = parallel_lines


def side_profile(points):
    return ConfigurationProfile(
        blocks=partition(points),
        collinear=collinear_subsets(points),
        planar=coplanar(*points),
        all_collinear=collinear(*points),
        parallel_lines=tuple(parallel_line_splits(points)))


def coincidence_collinearity_profile(design):
    """coincidences, collinear subsets, planarity and parallel lines

    :param design: :class:`PodDesign` with rational anchors
    :return: dict with a :class:`ConfigurationProfile` for `'platform'`
        and `'base'` and the list `'parallel'` of splits (triple, pair)
        shared by both sides, i.e. the triples lie on lines g and g'
        parallel to the lines h and h' of the pairs

    Indices are 0-based. The profile only consists of index sets and
    flags, so relabeling legs permutes it and swapping exchanges sides.
    """
    platform = side_profile(design.platform)
    base = side_profile(design.base)
    shared = tuple(s for s in platform.parallel_lines
                   if s in base.parallel_lines)
    return {'platform': platform, 'base': base, 'parallel': shared}


# --- maps ---

class _Plane:
    """affine chart of a plane in space by two coordinate axes"""

    def __init__(self, points):
        points = list(points)
        p0 = points[0]
        rows = [sub(p, p0) for p in points[1:]]
        basis = [list(v) for v in _independent(rows, 2)]
        if len(basis) < 2:
            raise ValueError("points do not span a plane")
        normal = cross(*basis)
        # drop the axis with nonzero normal component, preferring z
        self.drop = next(k for k in (2, 1, 0) if normal[k] != 0)
        self.keep = tuple(k for k in range(3) if k != self.drop)
        self.normal = normal
        self.offset = dot(normal, p0)
        for p in points:
            if dot(normal, p) != self.offset:
                raise ValueError("points are not coplanar")

    def project(self, p):
        return tuple(p[k] for k in self.keep)

    def lift(self, q):
        n, k = self.normal, self.drop
        i, j = self.keep
        x = [Fraction(0)] * 3
        x[i], x[j] = q
        x[k] = (self.offset - n[i] * q[0] - n[j] * q[1]) / n[k]
        return tuple(x)

    def lift_direction(self, q):
        n, k = self.normal, self.drop
        i, j = self.keep
        x = [Fraction(0)] * 3
        x[i], x[j] = q
        x[k] = -(n[i] * q[0] + n[j] * q[1]) / n[k]
        return tuple(x)

    @property
    def metric(self):
        """Gram matrix of the lifted unit directions"""
        u = self.lift_direction((1, 0))
        v = self.lift_direction((0, 1))
        return [[dot(u, u), dot(u, v)], [dot(v, u), dot(v, v)]]


def _independent(vectors, count):
    chosen = []
    for v in vectors:
        if rank(chosen + [v]) > len(chosen):
            chosen.append(v)
        if len(chosen) == count:
            break
    return chosen


@prettyclass
class PlanarMap:
    """map between anchor configurations

    :param kind: one of `affinity`, `similarity`, `congruence`,
        `reflection-congruence` or `projectivity-on-line`
    :param matrix: linear part (3x3 for spatial, 2x2 for planar maps in
        chart coordinates, 2x2 homogeneous for line projectivities)
    :param translation: translation part (chart coordinates)
    :param source_metric: Gram matrix of the source chart (planar only)
    :param target_metric: Gram matrix of the target chart (planar only)
    """

    def __init__(self, kind, matrix, translation=None,
                 source_metric=None, target_metric=None):
        if kind not in KINDS:
            raise ValueError(f"unknown map kind {kind!r}")
        self.kind = kind
        self.matrix = matrix
        self.translation = translation
        self.source_metric = source_metric
        self.target_metric = target_metric
        self._source = self._target = None

    @property
    def planar(self):
        return self.source_metric is not None

    def apply(self, x):
        """image of a point given in source chart coordinates"""
        if self.kind == 'projectivity-on-line':
            (a, b), (c, d) = self.matrix
            den = c * x + d
            return None if den == 0 else (a * x + b) / den
        return tuple(sum(a * v for a, v in zip(row, x)) + s
                     for row, s in zip(self.matrix, self.translation))

    def apply_point(self, p):
        """image of a source point in space (planar and spatial maps)"""
        if self._source is None:
            return self.apply(p)
        return self._target.lift(self.apply(self._source.project(p)))

    @property
    def pullback_metric(self):
        """metric $A^T G_t A$ in source chart coordinates"""
        g = self.target_metric if self.planar else _identity(3)
        a = self.matrix
        return mat_mul(mat_mul(transpose(a), g), a)


def _identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _affine_fit(source, target, dim):
    """linear part and translation carrying source to target or None"""
    base = _independent_indices(source, dim)
    s0, t0 = source[base[0]], target[base[0]]
    u = [sub(source[k], s0) for k in base[1:]]
    v = [sub(target[k], t0) for k in base[1:]]
    # rows of A solve u_k . a_row = v_k[row]
    matrix = []
    for r in range(dim):
        row = solve(u, [vk[r] for vk in v])
        if row is None:
            return None
        matrix.append(row)
    translation = tuple(t - sum(a * x for a, x in zip(row, s0))
                        for row, t in zip(matrix, t0))
    for s, t in zip(source, target):
        image = tuple(sum(a * x for a, x in zip(row, s)) + c
                      for row, c in zip(matrix, translation))
        if image != tuple(t):
            return None
    return matrix, translation


def _independent_indices(points, dim):
    chosen, vectors = [0], []
    for k in range(1, len(points)):
        v = sub(points[k], points[0])
        if rank(vectors + [v]) > len(vectors):
            vectors.append(v)
            chosen.append(k)
        if len(vectors) == dim:
            break
    return chosen


def _line_parameter(points):
    p0 = next(p for p in points)
    q = next(p for p in points if p != p0)
    d = sub(q, p0)
    k = next(i for i in range(3) if d[i] != 0)
    return [(p[k] - p0[k]) / d[k] for p in points]


def _fit_projectivity(source, target):
    s, t = _line_parameter(source), _line_parameter(target)
    pairs = []
    for a, b in zip(s, t):
        if a not in [p[0] for p in pairs]:
            pairs.append((a, b))
    if len(pairs) < 3:
        raise ValueError("projectivity requires three distinct source "
                         "points on the line")
    rows = [[a, Fraction(1), -a * b, -b] for a, b in pairs[:3]]
    kernel = nullspace(rows)
    if len(kernel) != 1:
        return None
    a, b, c, d = kernel[0]
    if a * d - b * c == 0:
        return None
    for x, y in zip(s, t):
        if x * c + d == 0 or (a * x + b) / (c * x + d) != y:
            return None
    return PlanarMap('projectivity-on-line', [[a, b], [c, d]])


def fit_map(source, target, kind='affinity'):
    """exact map of the given kind carrying source to target

    :param source: sequence of points (2 or 3 coordinates)
    :param target: sequence of points of equal length
    :param kind: `affinity`, `similarity`, `congruence`,
        `reflection-congruence` or `projectivity-on-line`
    :return: :class:`PlanarMap` or None if no such map exists

    Planar configurations are fitted in the affine chart of their planes,
    the kind is then decided by the chart metrics. A planar congruence
    is realizable with either orientation in space, so it counts as
    both `congruence` and `reflection-congruence`.

    >>> m = fit_map([(0, 0), (1, 0), (0, 1)], [(0, 0), (1, 0), (0, 2)])
    >>> m.matrix
    [[Fraction(1, 1), Fraction(0, 1)], [Fraction(0, 1), Fraction(2, 1)]]

    """
    if kind not in KINDS:
        raise ValueError(f"unknown map kind {kind!r}, use one of {KINDS}")
    source = [point(p) for p in source]
    target = [point(p) for p in target]
    if len(source) != len(target):
        msg = f"source and target differ in length, " \
              f"{len(source)} != {len(target)}"
        raise ValueError(msg)
    dim = affine_dimension(source)
    if kind == 'projectivity-on-line':
        if dim != 1:
            raise ValueError("projectivity requires collinear source points")
        if affine_dimension(target) != 1:
            return None
        return _fit_projectivity(source, target)
    if dim < 2:
        raise ValueError(f"{kind} requires a planar or spatial source "
                         f"configuration, got dimension {dim}")
    if affine_dimension(target) != dim:
        return None
    if dim == 3:
        fit = _affine_fit(source, target, 3)
        if fit is None:
            return None
        result = PlanarMap(kind, *fit)
    else:
        s_plane, t_plane = _Plane(source), _Plane(target)
        fit = _affine_fit([s_plane.project(p) for p in source],
                          [t_plane.project(p) for p in target], 2)
        if fit is None:
            return None
        result = PlanarMap(kind, *fit, source_metric=s_plane.metric,
                           target_metric=t_plane.metric)
        result._source, result._target = s_plane, t_plane
    if determinant(result.matrix) == 0:
        return None
    return result if _has_kind(result, kind) else None


def _has_kind(m, kind):
    if kind == 'affinity':
        return True
    g = m.source_metric if m.planar else _identity(len(m.matrix))
    pull = m.pullback_metric
    if kind == 'similarity':
        ratio = pull[0][0] / g[0][0]
        return all(p == ratio * q for r, s in zip(pull, g)
                   for p, q in zip(r, s))
    if pull != g:
        return False
    if m.planar or kind == 'congruence':
        return m.planar or determinant(m.matrix) > 0
    return determinant(m.matrix) < 0


def congruent(source, target):
    """source and target related by an orientation preserving isometry

    Collinear configurations are compared by their pairwise distances.
    """
    source = [point(p) for p in source]
    target = [point(p) for p in target]
    if len(source) != len(target):
        return False
    if affine_dimension(source) >= 2:
        return fit_map(source, target, 'congruence') is not None
    return all(dot(sub(a, b), sub(a, b)) == dot(sub(c, d), sub(c, d))
               for (a, c), (b, d) in combinations(zip(source, target), 2))


def affine_isometric_directions(planar_map):
    r"""directions not distorted by a planar affinity

    :param planar_map: regular planar :class:`PlanarMap`
    :return: tuple (label, directions) with label `all`, `two`, `one`
        or `none-real` and the directions as source chart vectors

    Solves $d^T(A^T G_t A - G_s)d = 0$ for the direction $d$. Directions
    are exact when the discriminant is a rational square, float
    otherwise.

    >>> m = fit_map([(0, 0), (1, 0), (0, 1)], [(0, 0), (2, 0), (0, '1/2')])
    >>> affine_isometric_directions(m)[0]
    'two'

    """
    if not planar_map.planar:
        raise ValueError("isometric directions require a planar map")
    pull, g = planar_map.pullback_metric, planar_map.source_metric
    (q11, q12), (_, q22) = [[p - s for p, s in zip(r, t)]
                            for r, t in zip(pull, g)]
    if q11 == q12 == q22 == 0:
        return 'all', []
    disc = q12 * q12 - q11 * q22
    if disc < 0:
        return 'none-real', []
    if q11 == 0:
        if q12 == 0:
            return 'one', [(Fraction(1), Fraction(0))]
        return 'two', [(Fraction(1), Fraction(0)), (q22, -2 * q12)]
    root = isqrt_fraction(disc)
    if root is None:
        root = disc ** .5
    if disc == 0:
        return 'one', [(-q12, q11)]
    return 'two', [(-q12 + root, q11), (-q12 - root, q11)]


# --- conics ---

@prettyclass
class Conic:
    """conic $Ax^2 + Bxy + Cy^2 + Dx + Ey + F = 0$

    :param coefficients: (A, B, C, D, E, F) or None if not unique
    :param regular: True for a regular conic, False if it splits
    :param unique: False if infinitely many conics pass the points
    """

    def __init__(self, coefficients, regular, unique=True):
        self.coefficients = coefficients
        self.regular = regular
        self.unique = unique

    def __call__(self, x, y):
        a, b, c, d, e, f = self.coefficients
        return a * x * x + b * x * y + c * y * y + d * x + e * y + f

    @property
    def matrix(self):
        a, b, c, d, e, f = self.coefficients
        h = Fraction(1, 2)
        return [[a, b * h, d * h], [b * h, c, e * h], [d * h, e * h, f]]


def conic_through_five(points):
    """the conic through five planar points

    :param points: five 2-points (or coplanar 3-points)
    :return: :class:`Conic`; unless unique, coefficients are None

    >>> c = conic_through_five([(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1)])
    >>> c.regular, c.unique
    (True, True)

    """
    points = [point(p) for p in points]
    if len(points) != 5:
        raise ValueError(f"five points required, got {len(points)}")
    if len(_distinct(points)) < 5:
        raise ValueError("conic through five points requires distinct points")
    dim = affine_dimension(points)
    if dim == 3:
        raise ValueError("points are not coplanar")
    if dim < 2:
        # the line joined with any other line
        return Conic(None, False, unique=False)
    plane = _Plane(points)
    rows = [[x * x, x * y, y * y, x, y, Fraction(1)]
            for x, y in map(plane.project, points)]
    kernel = nullspace(rows)
    if len(kernel) != 1:
        return Conic(None, False, unique=False)
    coefficients = tuple(kernel[0])
    conic = Conic(coefficients, True)
    conic.regular = determinant(conic.matrix) != 0
    return conic


# --- singularity ---

@prettyclass
class SingularityVerdict:
    """outcome of the architectural singularity test"""

    def __init__(self, status, samples, witness=None, rank=None):
        self.status = status
        self.samples = samples
        self.witness = witness
        self.rank = rank

    @property
    def singular(self):
        return self.status == 'singular'


def random_rational_pose(rng=None, size=7):
    """random exact pose with small integer Euler parameters"""
    rng = rng or _random
    while True:
        e = [rng.randint(-size, size) for _ in range(4)]
        if any(e):
            break
    t = [Fraction(rng.randint(-4 * size, 4 * size), rng.randint(1, size))
         for _ in range(3)]
    return StudyPoint.from_pose(e, t)


def leg_lines(design, pose):
    """Plücker coordinates (direction, moment) of the legs in **pose**"""
    rot, t = rotation_translation(pose)
    rows = []
    for leg in design.legs:
        image = tuple(sum(r * x for r, x in zip(row, leg.platform)) + s
                      for row, s in zip(rot, t))
        d = sub(image, leg.base)
        rows.append(list(d) + list(cross(leg.base, d)))
    return rows


def architecturally_singular(design, samples=SAMPLES, seed=None):
    """probabilistic architectural singularity test

    :param design: pentapod or hexapod with rational anchors
    :param samples: number of random exact poses
    :param seed: optional seed of the pose generator
    :return: :class:`SingularityVerdict`; `regular` carries a witness
        pose where the leg lines have full exact rank

    A full rank witness certifies regularity. Rank deficiency in all
    samples is reported as singular with probabilistic confidence.
    """
    if design.n not in (5, 6):
        raise ValueError(f"singularity test requires 5 or 6 legs, "
                         f"got {design.n}")
    rng = Random(seed) if seed is not None else Random(SEED)
    best = 0
    for _ in range(samples):
        pose = random_rational_pose(rng)
        r = rank(leg_lines(design, pose))
        best = max(best, r)
        if r == design.n:
            _logger.debug(f"regular witness {pose.coordinates} for "
                          f"{design.name or 'design'}")
            return SingularityVerdict('regular', samples, pose, r)
    _logger.debug(f"{design.name or 'design'} singular with rank {best} "
                  f"in {samples} samples")
    return SingularityVerdict('singular', samples, rank=best)


# --- cylinders ---

def on_revolution_cylinder(points, ruling):
    """cylinder of revolution through five points with a given ruling

    :param points: five 3-points
    :param ruling: pair of 0-based indices spanning the ruling
    :return: `'skew-lines'` if all points lie on the ruling and one real
        line skew to it, `'cylinder'` if a real cylinder of revolution
        with this ruling contains all points, `'none'` otherwise
    """
    points = [point(p) for p in points]
    i, j = ruling
    p, q = points[i], points[j]
    if p == q:
        raise ValueError("ruling points must be distinct")
    d = sub(q, p)
    off = [r for r in points if not is_zero_vector(cross(d, sub(r, p)))]
    if len(_distinct(off)) >= 2 and collinear(*off):
        a, b = _distinct(off)[:2]
        if determinant([list(d), list(sub(b, a)), list(sub(a, p))]) != 0:
            return 'skew-lines'
    dd = dot(d, d)
    proj = _distinct([tuple(x - dot(sub(r, p), d) / dd * y
                            for x, y in zip(sub(r, p), d))
                      for r in points])
    if len(proj) < 3 or collinear(*proj):
        return 'none'
    u = next(cross(d, a) for a in _identity(3)
             if not is_zero_vector(cross(d, a)))
    v = cross(d, u)
    rows = [[dot(x, u), dot(x, v), dot(x, x), Fraction(1)] for x in proj]
    circle = next(c for c in combinations(range(len(proj)), 3)
                  if not collinear(*(proj[k] for k in c)))
    for k in range(len(rows)):
        if k not in circle and \
                determinant([rows[c] for c in circle] + [rows[k]]) != 0:
            return 'none'
    return 'cylinder'


# --- spherical manipulators ---

def _same(a, b, exact):
    if exact:
        return a == b
    return sum((float(x) - float(y)) ** 2 for x, y in zip(a, b)) \
        <= CHORD_TOL ** 2


def spherical_rpr_self_motion(platform, base):
    """self-motion type of a spherical 3-legged RPR manipulator

    :param platform: three platform points on the unit sphere
    :param base: three base points on the unit sphere
    :return: `'case-I'` if two platform points coincide with the third
        base point (after relabeling or exchange of platform and base),
        `'case-II'` if one side degenerates into a point, else `'none'`

    A configuration meeting both conditions, e.g. a degenerate base
    with two platform points on it, is reported as `'case-I'`.
    """
    platform, base = [tuple(p) for p in platform], [tuple(p) for p in base]
    if len(platform) != 3 or len(base) != 3:
        raise ValueError("three platform and three base points required")
    exact = all(isinstance(x, (int, Fraction)) for p in platform + base
                for x in p)
    for side, other in ((platform, base), (base, platform)):
        for a, b, c in permutations(range(3)):
            if _same(side[b], side[c], exact) \
                    and _same(side[b], other[a], exact):
                return 'case-I'
    for side in (base, platform):
        if _same(side[0], side[1], exact) and _same(side[1], side[2], exact):
            return 'case-II'
    return 'none'
