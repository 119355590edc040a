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

"""construction and numeric verification of self-motions

Motions are sampled on a two parameter grid $(u, v)$ of a declared
chart. Each :class:`MotionSample` carries the normalized float Study
point of the pose and the squared leg lengths in that pose.
"""

from csv import writer
from fractions import Fraction
from itertools import combinations
from logging import getLogger
from math import ceil, cos, pi, sin, sqrt
from random import Random

from prettyclass import prettyclass
from numpy import array, cross as _cross, linspace, mean
from numpy.linalg import norm as _norm
from scipy.optimize import minimize
from scipy.spatial.transform import Rotation

from .geometry import PodDesign, SEED, affine_dimension, congruent, fit_map
from .study import StudyPoint, constraint_jacobian, radii_at, \
    rotation_translation, sphere_condition, PSI
from .tools import to_float
from .tools.algebra import cross, mat_mul, rank, solve, sub, transpose
from .tools.numerics import TOL, MAX_ITER, RANK_TOL, bisection_method, \
    numeric_rank, singular_values

_logger = getLogger(__name__)

SAMPLES = 100
ORIENTATIONS = 20
DEVIATION = 1e-9
RESIDUAL = 1e-9
SCAN = 24
HOME = 0.3, -0.2, 0.5
HEIGHT = 1.
MAX_GRID = 512
EMPTY_GRID = 64


@prettyclass
class MotionSample:
    """pose of a sampled self-motion

    :param u: first chart parameter
    :param v: second chart parameter
    :param pose: float :class:`StudyPoint` with $N = 1$ and $e_0 \\geq 0$
    :param lengths: squared leg lengths in **pose**
    """

    def __init__(self, u, v, pose, lengths):
        self.u = float(u)
        self.v = float(v)
        self.pose = pose
        self.lengths = tuple(float(x) for x in lengths)

    @property
    def translation(self):
        return rotation_translation(self.pose)[1]

    @property
    def psi(self):
        return self.pose.psi

    def row(self):
        """u, v, e0..e3, f0..f3, t1..t3 and the leg lengths"""
        return [self.u, self.v] + list(self.pose.coordinates) + \
            list(self.translation) + [sqrt(x) for x in self.lengths]


@prettyclass
class TranslationalMotion:
    """translational self-motions of a design

    :param kind: `two_dim`, `one_dim_circular` or `none`
    :param orientations: rotation matrices (exact for congruent and
        reflection-congruent designs) admitting the motion
    :param ranks: rank of the centered leg vectors per orientation
    :param note: description of the orientation set
    """

    def __init__(self, kind, orientations=(), ranks=(), note=''):
        self.kind = kind
        self.orientations = list(orientations)
        self.ranks = list(ranks)
        self.note = note


@prettyclass
class MotionCheck:
    """summary of a sample stream

    :param count: number of samples
    :param deviation: largest relative variation of a squared leg length
    :param psi: largest $|\\Psi|$
    :param norm: largest $|N - 1|$
    """

    def __init__(self, count, deviation, psi, norm):
        self.count = count
        self.deviation = deviation
        self.psi = psi
        self.norm = norm

    @property
    def passed(self):
        return bool(self.count) and self.deviation <= DEVIATION and \
            self.psi <= TOL and self.norm <= TOL


def _design(design):
    return design if isinstance(design, PodDesign) else PodDesign(design)


def _float(p):
    return array(to_float(list(p)), dtype=float)


def _unit(v):
    return v / _norm(v)


def _sample(design, u, v, rotation, t):
    pose = StudyPoint.from_rotation(rotation, t).normalized()
    return MotionSample(u, v, pose, radii_at(design, pose))


def check_samples(samples):
    """leg length variation and Study residuals of a sample stream"""
    samples = list(samples)
    if not samples:
        return MotionCheck(0, float('inf'), float('inf'), float('inf'))
    lengths = array([s.lengths for s in samples], dtype=float)
    scale = max(1., float(lengths.max()))
    deviation = float((lengths.max(axis=0) - lengths.min(axis=0)).max())
    return MotionCheck(
        count=len(samples),
        deviation=deviation / scale,
        psi=max(abs(s.pose.psi) for s in samples),
        norm=max(abs(s.pose.norm - 1.) for s in samples))


def write_csv(samples, stream):
    """write samples as csv rows

    :param samples: iterable of :class:`MotionSample`
    :param stream: writable text file
    """
    samples = list(samples)
    n = len(samples[0].lengths) if samples else 0
    out = writer(stream)
    out.writerow(['u', 'v'] + [f"e{i}" for i in range(4)] +
                 [f"f{i}" for i in range(4)] +
                 [f"t{i}" for i in range(1, 4)] +
                 [f"l{i}" for i in range(1, n + 1)])
    for s in samples:
        out.writerow([repr(x) for x in s.row()])
    return len(samples)


# --- translations ---

def _frame_vectors(points):
    """two independent difference vectors and their cross product"""
    p0 = points[0]
    for j, k in combinations(range(1, len(points)), 2):
        d1, d2 = sub(points[j], p0), sub(points[k], p0)
        n = cross(d1, d2)
        if any(n):
            return (0, j, k), [d1, d2, n]
    return None, None


def congruence_rotation(platform, base):
    """exact orientation preserving rotation carrying platform to base

    :return: 3x3 rational matrix R with $R(m_i - m_j) = M_i - M_j$ or
        None if platform and base are not congruent or collinear
    """
    if not congruent(platform, base):
        return None
    legs, source = _frame_vectors(platform)
    if legs is None:
        return None
    i, j, k = legs
    d1, d2 = sub(base[j], base[i]), sub(base[k], base[i])
    target = [d1, d2, cross(d1, d2)]
    x, y = transpose(source), transpose(target)
    return [solve(transpose(x), row) for row in y]


def _mirror(normal):
    nn = sum(x * x for x in normal)
    return [[Fraction(int(i == j)) - Fraction(2 * normal[i] * normal[j], nn)
             for j in range(3)] for i in range(3)]


def _centered_rank(platform, base, rot, exact=True):
    w = [sub(tuple(sum(r * x for r, x in zip(row, m)) for row in rot), M)
         for m, M in zip(platform, base)]
    rows = [sub(x, w[0]) for x in w[1:]]
    if exact:
        return rank(rows)
    return numeric_rank(rows)


def _sigma(platform, base):
    m, M = array(platform, dtype=float), array(base, dtype=float)
    scale = max(1., float(abs(m).max()), float(abs(M).max()))

    def sigma(rotvec):
        w = Rotation.from_rotvec(rotvec).apply(m) - M
        s = singular_values((w[1:] - w[0]) / scale)
        return float(s[1]) if len(s) > 1 else 0.
    return sigma


def translational_self_motion(design, samples=ORIENTATIONS, seed=None,
                              tol=RANK_TOL):
    """orientations with translational self-motions

    :param design: :class:`PodDesign`
    :param samples: number of sampled orientations
    :param seed: seed of the orientation sampler
    :param tol: relative rank tolerance of the numeric search
    :return: :class:`TranslationalMotion`

    In a fixed orientation $R$ the platform can only translate if the
    centered leg vectors $(Rm_i - M_i) - (Rm_1 - M_1)$ have rank at
    most one. Rank zero (congruent platform and base) gives the
    2-dimensional translation, rank one 1-dimensional circular
    translations. Congruent and reflection-congruent designs are
    decided exactly, all others by a numeric search over orientations.
    """
    design = _design(design)
    platform, base = design.platform, design.base
    rng = Random(seed) if seed is not None else Random(SEED)

    rot = congruence_rotation(platform, base)
    if rot is not None:
        r = _centered_rank(platform, base, rot)
        _logger.debug(f"congruent design, centered rank {r}")
        return TranslationalMotion('two_dim', [rot], [r],
                                   'orientation of the congruence')

    if affine_dimension(platform) == 3:
        mirrored = fit_map(platform, base, 'reflection-congruence')
        if mirrored is not None:
            orientations, ranks = [], []
            while len(orientations) < samples:
                normal = [rng.randint(-9, 9) for _ in range(3)]
                if not any(normal):
                    continue
                rot = mat_mul(_mirror(normal), mirrored.matrix)
                orientations.append(rot)
                ranks.append(_centered_rank(platform, base, rot))
            if max(ranks) <= 1:
                return TranslationalMotion(
                    'one_dim_circular', orientations, ranks,
                    'rotations composed of the mirror congruence and a '
                    'reflection, i.e. e3 = 0 in the frame of the mirror')

    sigma = _sigma(platform, base)
    seeds = Rotation.random(samples, random_state=rng.randint(0, 2 ** 31))
    starts = sorted((sigma(v), tuple(v)) for v in seeds.as_rotvec())[:3]
    for _, start in starts:
        result = minimize(sigma, array(start), method='Nelder-Mead',
                          options={'xatol': 1e-12, 'fatol': 1e-14,
                                   'maxiter': 40 * MAX_ITER})
        if result.fun <= tol:
            rot = Rotation.from_rotvec(result.x).as_matrix().tolist()
            _logger.debug(f"numeric orientation with sigma {result.fun}")
            return TranslationalMotion(
                'one_dim_circular', [rot],
                [_centered_rank(platform, base, rot, exact=False)],
                'numeric orientation')
    return TranslationalMotion('none')


def translation_samples(design, samples=SAMPLES):
    """2-dimensional translation of a congruent design

    The chart is the sphere of leg vectors in spherical coordinates
    $(u, v)$; all legs share one leg vector.
    """
    design = _design(design)
    rot = congruence_rotation(design.platform, design.base)
    if rot is None:
        raise ValueError("translation requires congruent platform and base")
    rotation = Rotation.from_matrix(array(rot, dtype=float))
    w = rotation.apply(_float(design.platform[0])) - _float(design.base[0])
    radii = [r for r in design.radii if r is not None]
    if radii and any(r != radii[0] for r in radii):
        raise ValueError("no real pose for the given radii")
    length = sqrt(float(radii[0])) if radii else HEIGHT
    k = ceil(sqrt(samples))
    result = []
    for u in linspace(0., 2 * pi, k, endpoint=False):
        for v in linspace(0., pi, k + 2)[1:-1]:
            leg = length * array([cos(u) * sin(v), sin(u) * sin(v), cos(v)])
            result.append(_sample(design, u, v, rotation, leg - w))
            if len(result) == samples:
                return result
    return result


# --- spherical motions ---

def _spherical_center(design):
    from .classify import classify
    report = classify(design)
    for case in report.cases:
        if case.spherical:
            return case.witness['center']
    msg = f"no spherical case matches {design.name or 'design'}, " \
          f"matched are {report.labels or 'none'}"
    raise ValueError(msg)


def _grid(samples):
    """even grid size, so u = 0 is a grid line"""
    k = max(2, ceil(sqrt(samples)))
    return k + k % 2


def _roots(f, steps=SCAN):
    grid = linspace(0., 2 * pi, steps + 1)
    values = [f(w) for w in grid]
    for a, b, fa, fb in zip(grid, grid[1:], values, values[1:]):
        if fa == 0:
            yield a
        elif fa * fb < 0:
            yield bisection_method(f, a, b, tol=TOL, max_iter=MAX_ITER)


def spherical_self_motion(design, center=None, samples=SAMPLES,
                          home=HOME):
    """2-dimensional spherical self-motion about a pinned point

    :param design: :class:`PodDesign`
    :param center: dict with the pinned `platform` point and the `base`
        point it coincides with (as in the witness of a spherical case);
        taken from :func:`classify` if missing
    :param samples: number of samples
    :param home: rotation vector of the assembly orientation fixing
        the radii
    :return: list of :class:`MotionSample`

    The platform rotates about the pinned point. Rotations are charted
    by zyz Euler angles $(u, v, w)$; for each grid point $(u, v)$ the
    angle $w$ solves the sphere condition of the first leg not passing
    through the pinned point by bisection. All further legs have to
    keep their lengths, otherwise the center is inconsistent with the
    design.
    """
    design = _design(design)
    if center is None:
        center = _spherical_center(design)
    g, c = _float(center['platform']), _float(center['base'])
    d = [_float(m) - g for m in design.platform]
    D = [_float(M) - c for M in design.base]
    start = Rotation.from_rotvec(home)
    radii = [float(_norm(start.apply(x) - y)) ** 2 for x, y in zip(d, D)]
    free = [i for i in range(design.n)
            if _norm(d[i]) > TOL and _norm(D[i]) > TOL]
    scale = max([1.] + radii)

    def residual(i, rotation):
        return float(_norm(rotation.apply(d[i]) - D[i])) ** 2 - radii[i]

    result, k = [], _grid(samples)
    while len(result) < samples and k <= MAX_GRID:
        result = []
        for u in linspace(0., 2 * pi, k, endpoint=False):
            for v in linspace(0., pi, k + 2)[1:-1]:
                if not free:
                    rotation = Rotation.from_euler('zyz', [u, v, 0.])
                else:
                    def f(w):
                        rotation = Rotation.from_euler('zyz', [u, v, w])
                        return residual(free[0], rotation) / scale
                    w = next(_roots(f), None)
                    if w is None:
                        continue
                    rotation = Rotation.from_euler('zyz', [u, v, w])
                for i in free[1:]:
                    if abs(residual(i, rotation)) > DEVIATION * scale:
                        msg = f"center {center} inconsistent with design: " \
                              f"leg {i + 1} changes its length"
                        raise ValueError(msg)
                t = c - rotation.apply(g)
                result.append(_sample(design, u, v, rotation, t))
                if len(result) == samples:
                    break
            if len(result) == samples:
                break
        if not result and k >= EMPTY_GRID:
            break
        k *= 2
    if not result:
        raise ValueError("no real pose of the spherical self-motion")
    _logger.info(f"spherical self-motion of {design.name or 'design'}: "
                 f"{len(result)} samples")
    return result


# --- Schönflies motions ---

def _schoenflies_witness(design):
    from .classify import classify
    return classify(design).case('thm3.2').witness


def _circle_intersection(c1, r1, c2, r2):
    """both intersections of two circles in the plane or None"""
    delta = c2 - c1
    dist2 = float(delta @ delta)
    if dist2 == 0 or r1 < 0 or r2 < 0:
        return None
    a = (r1 - r2 + dist2) / (2 * dist2)
    h2 = r1 / dist2 - a * a
    if h2 < 0:
        return None
    mid = c1 + a * delta
    off = sqrt(h2) * array([-delta[1], delta[0]])
    return mid + off, mid - off


def schoenflies_self_motion(design, radii=None, samples=SAMPLES,
                            witness=None, span=None):
    """2-dimensional Schönflies self-motion of a planar affine design

    :param design: :class:`PodDesign` matching the Schönflies case
    :param radii: squared leg lengths (optional: design radii or the
        lengths of a lifted assembly pose)
    :param samples: number of samples
    :param witness: Schönflies witness (optional: from :func:`classify`)
    :param span: range of the translation along the axis around the
        assembly pose (default: half the shortest leg)
    :return: list of :class:`MotionSample`

    The chart is the rotation angle $u$ about the axis and the
    translation $v$ along the axis. The remaining translation follows
    from the sphere conditions of one leg on each of the parallel lines,
    the other three legs close identically.
    """
    design = _design(design)
    witness = witness or _schoenflies_witness(design)
    g, h = witness['g'], witness['h']
    m = [_float(p) for p in design.platform]
    M = [_float(p) for p in design.base]
    a, a_ = _unit(_float(witness['axis'])), \
        _unit(_float(witness['platform_axis']))
    n = _unit(_cross(a, M[h[0]] - M[g[0]]))
    n_ = _unit(_cross(a_, m[h[0]] - m[g[0]]))
    frame = array([a, n, _cross(a, n)]).T
    frame_ = array([a_, n_, _cross(a_, n_)]).T
    align = Rotation.from_matrix(frame @ frame_.T)
    b = _cross(a, n)

    if radii is None and all(r is not None for r in design.radii):
        radii = design.radii
    if radii is None:
        t0 = mean(M, axis=0) - align.apply(mean(m, axis=0)) + HEIGHT * n
        radii = [float(_norm(align.apply(x) + t0 - y)) ** 2
                 for x, y in zip(m, M)]
    else:
        t0 = None
    radii = [float(r) for r in radii]
    for line in (g, h):
        if max(radii[i] for i in line) - min(radii[i] for i in line) > \
                DEVIATION * max(1., max(radii)):
            raise ValueError("no real pose for the given radii: legs on "
                             "a common line need equal lengths")
    i, j = g[0], h[0]

    def poses(theta, s):
        rotation = Rotation.from_rotvec(theta * a) * align
        wi, wj = rotation.apply(m[i]) - M[i], rotation.apply(m[j]) - M[j]
        ri = radii[i] - (float(wi @ a) + s) ** 2
        rj = radii[j] - (float(wj @ a) + s) ** 2
        ci = -array([wi @ n, wi @ b])
        cj = -array([wj @ n, wj @ b])
        found = _circle_intersection(ci, ri, cj, rj)
        if found is None:
            return rotation, ()
        return rotation, [s * a + x * n + y * b for x, y in found]

    if t0 is not None:
        s0 = float(t0 @ a)
        _, home = poses(0., s0)
        branch = min(range(len(home)),
                     key=lambda k: _norm(home[k] - t0)) if home else 0
    else:
        shift = [float((align.apply(m[k]) - M[k]) @ a) for k in (i, j)]
        s0, branch = -sum(shift) / 2, 0
    if span is None:
        span = .5 * sqrt(min(radii))
    scale = max([1.] + radii)

    result, k = [], _grid(samples)
    while len(result) < samples and k <= MAX_GRID:
        result = []
        for u in linspace(-pi, pi, k, endpoint=False):
            for v in linspace(s0 - span, s0 + span, k + 1):
                rotation, found = poses(u, v)
                if not found:
                    continue
                sample = _sample(design, u, v, rotation, found[branch])
                if max(abs(x - r) for x, r in zip(sample.lengths, radii)) \
                        > DEVIATION * scale:
                    raise ValueError("design does not close along the "
                                     "Schönflies motion")
                result.append(sample)
                if len(result) == samples:
                    break
            if len(result) == samples:
                break
        if not result and k >= EMPTY_GRID:
            break
        k *= 2
    if not result:
        raise ValueError("no real pose for the given radii")
    _logger.info(f"Schönflies self-motion of {design.name or 'design'}: "
                 f"{len(result)} samples")
    return result


def motion_samples(design, case=None, samples=SAMPLES):
    """samples of the self-motion of a classified case

    :param design: :class:`PodDesign`
    :param case: :class:`CaseMatch` or label (default: first matched)
    :param samples: number of samples
    :return: list of :class:`MotionSample`
    """
    from .classify import classify, TRANSLATIONAL
    design = _design(design)
    if case is None or isinstance(case, str):
        report = classify(design)
        if not report.cases:
            raise ValueError(f"no case matches {design.name or 'design'}")
        case = report.case(case) if case else report.cases[0]
    if case.label in TRANSLATIONAL:
        return translation_samples(design, samples)
    if case.label == 'thm3.2':
        return schoenflies_self_motion(design, samples=samples,
                                       witness=case.witness)
    return spherical_self_motion(design, case.witness['center'], samples)


# --- local mobility ---

def _exact(pose):
    return StudyPoint([Fraction(x) for x in pose.e],
                      [Fraction(x) for x in pose.f])


def local_mobility(design, pose, exact=None, radii=None, tol=RESIDUAL):
    """local dimension of the self-motion through a pose

    :param design: :class:`PodDesign`
    :param pose: :class:`StudyPoint` on the variety of the design
    :param exact: exact rank over the rationals (default: if the pose
        is exact); floats are converted exactly
    :param radii: squared radii (optional: design radii or, if missing,
        the leg lengths in **pose**)
    :param tol: relative residual tolerance of float poses
    :return: $7 - r$ with $r$ the rank of the Jacobian of
        $(\\Psi, \\Lambda_1, \\ldots, \\Lambda_n)$ at **pose**

    Float ranks count singular values below `1e-8` times the largest
    one as zero.
    """
    design = _design(design)
    if not isinstance(pose, StudyPoint):
        pose = StudyPoint(tuple(pose)[:4], tuple(pose)[4:])
    exact = pose.exact if exact is None else exact
    if exact and not pose.exact:
        pose = _exact(pose)
    elif not exact and pose.exact:
        pose = pose.as_float()
    if radii is None:
        radii = list(design.radii)
        if any(r is None for r in radii):
            radii = radii_at(design, pose)
    norm = pose.norm
    if not norm:
        raise ValueError("pose on the exceptional cone N = 0")
    scale = abs(norm) * max([1.] + [abs(float(r)) for r in radii])
    residuals = [PSI.evaluate(pose)] + \
        [sphere_condition(leg.platform, leg.base, r).evaluate(pose)
         for leg, r in zip(design.legs, radii)]
    if exact:
        bad = [k for k, x in enumerate(residuals) if x != 0]
    else:
        bad = [k for k, x in enumerate(residuals) if abs(x) > tol * scale]
    if bad:
        names = ['Psi' if k == 0 else f"leg {k}" for k in bad]
        msg = f"pose not on the variety of the design: " \
              f"{', '.join(names)} violated"
        raise ValueError(msg)
    jacobian = constraint_jacobian(design, pose, radii)
    r = rank(jacobian) if exact else numeric_rank(jacobian)
    _logger.debug(f"jacobian rank {r} at {pose.coordinates}")
    return 8 - 1 - r
