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

r"""Study parameters of Euclidean displacements

A displacement $x \mapsto \hat{R}x + t$ is represented by the homogeneous
Study parameters $(e_0:e_1:e_2:e_3:f_0:f_1:f_2:f_3)$ on the quadric
$\Psi = e_0f_0 + e_1f_1 + e_2f_2 + e_3f_3 = 0$ outside the cone
$N = e_0^2 + e_1^2 + e_2^2 + e_3^2 = 0$, where $\hat{R} = R(e)/N$ and

.. math::

    f_0 &= (-e_1t_1 - e_2t_2 - e_3t_3)/2 \\
    f_1 &= (e_0t_1 + e_3t_2 - e_2t_3)/2 \\
    f_2 &= (-e_3t_1 + e_0t_2 + e_1t_3)/2 \\
    f_3 &= (e_2t_1 - e_1t_2 + e_0t_3)/2

"""

from fractions import Fraction
from logging import getLogger
from math import sqrt
from warnings import warn

from prettyclass import prettyclass

from .exactalg import MultiPoly, STUDY_VARS, collect_coefficients, \
    isqrt_fraction, poly

try:
    from numpy import array, asarray, dot as _dot
except ImportError:
    array = asarray = _dot = None
    warn("fast float evaluation of quadratic forms requires 'numpy'")


_logger = getLogger(__name__)

E = MultiPoly.variable('e0'), MultiPoly.variable('e1'), \
    MultiPoly.variable('e2'), MultiPoly.variable('e3')
F = MultiPoly.variable('f0'), MultiPoly.variable('f1'), \
    MultiPoly.variable('f2'), MultiPoly.variable('f3')


def radius_symbol(i):
    """name of the squared radius symbol of leg **i** (1-based)"""
    return f"R{i}sq"


def _is_exact(x):
    return isinstance(x, (int, Fraction, MultiPoly)) \
        and not isinstance(x, bool)


def _scalar(x):
    """Fraction for exact numbers, MultiPoly for symbols, float otherwise"""
    if isinstance(x, MultiPoly):
        return x.constant() if x.is_constant else x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return _scalar(poly(x))
    return float(x)


# --- rotation and translation ---

def homogeneous_rotation(e):
    """rotation matrix $R(e)$ without the normalization by $N$

    Entries are homogeneous quadratic in **e**; $R R^T = N^2 I$
    and $\\det R = N^3$.
    """
    e0, e1, e2, e3 = e
    return [
        [e0 * e0 + e1 * e1 - e2 * e2 - e3 * e3,
         2 * (e1 * e2 - e0 * e3),
         2 * (e1 * e3 + e0 * e2)],
        [2 * (e1 * e2 + e0 * e3),
         e0 * e0 - e1 * e1 + e2 * e2 - e3 * e3,
         2 * (e2 * e3 - e0 * e1)],
        [2 * (e1 * e3 - e0 * e2),
         2 * (e2 * e3 + e0 * e1),
         e0 * e0 - e1 * e1 - e2 * e2 + e3 * e3]]


def homogeneous_translation(e, f):
    """translation vector multiplied by $N$"""
    e0, e1, e2, e3 = e
    f0, f1, f2, f3 = f
    return (2 * (-e1 * f0 + e0 * f1 - e3 * f2 + e2 * f3),
            2 * (-e2 * f0 + e3 * f1 + e0 * f2 - e1 * f3),
            2 * (-e3 * f0 - e2 * f1 + e1 * f2 + e0 * f3))


def translation_to_f(e, t):
    """Study parameters f of Euler parameters **e** and translation **t**"""
    e0, e1, e2, e3 = e
    t1, t2, t3 = t
    half = Fraction(1, 2) if all(map(_is_exact, (*e, *t))) else 0.5
    return ((-e1 * t1 - e2 * t2 - e3 * t3) * half,
            (e0 * t1 + e3 * t2 - e2 * t3) * half,
            (-e3 * t1 + e0 * t2 + e1 * t3) * half,
            (e2 * t1 - e1 * t2 + e0 * t3) * half)


@prettyclass
class StudyPoint:
    """homogeneous Study parameters of a displacement

    :param e: Euler parameters $(e_0, e_1, e_2, e_3)$
    :param f: parameters $(f_0, f_1, f_2, f_3)$

    Coordinates are either exact (int or Fraction) or float.

    >>> p = StudyPoint((1, 0, 0, 0), (0, 0, 0, 0))
    >>> p.psi, p.norm
    (Fraction(0, 1), Fraction(1, 1))

    """

    def __init__(self, e, f):
        e, f = tuple(e), tuple(f)
        if len(e) != 4 or len(f) != 4:
            msg = f"four Euler and four f parameters required, " \
                  f"got {len(e)} and {len(f)}"
            raise ValueError(msg)
        if all(isinstance(x, (int, Fraction)) and not isinstance(x, bool)
               for x in e + f):
            e = tuple(Fraction(x) for x in e)
            f = tuple(Fraction(x) for x in f)
        else:
            e = tuple(float(x) for x in e)
            f = tuple(float(x) for x in f)
        if not any(e + f):
            raise ValueError("Study parameters must not all vanish")
        self.e = e
        self.f = f

    @classmethod
    def from_pose(cls, e, t):
        """from Euler parameters **e** and translation vector **t**"""
        return cls(e, translation_to_f(e, t))

    @classmethod
    def from_rotation(cls, rotation, t):
        """from a :class:`scipy.spatial.transform.Rotation` and **t**"""
        x, y, z, w = rotation.as_quat()
        return cls.from_pose((w, x, y, z), t)

    @property
    def exact(self):
        return isinstance(self.e[0], Fraction)

    @property
    def coordinates(self):
        return self.e + self.f

    def __iter__(self):
        return iter(self.coordinates)

    def __len__(self):
        return 8

    def __eq__(self, other):
        if not isinstance(other, StudyPoint):
            return NotImplemented
        return self.coordinates == other.coordinates

    def __hash__(self):
        return hash(self.coordinates)

    def as_dict(self):
        """mapping of the variable names e0..f3 to the coordinates"""
        return dict(zip(STUDY_VARS, self.coordinates))

    @property
    def psi(self):
        """Study quadric $\\Psi$"""
        return sum(a * b for a, b in zip(self.e, self.f))

    @property
    def norm(self):
        """$N = e_0^2 + e_1^2 + e_2^2 + e_3^2$"""
        return sum(a * a for a in self.e)

    def is_proper(self, tol=None):
        """on the Study quadric and off the exceptional cone"""
        psi, norm = self.psi, self.norm
        if tol is None and self.exact:
            return psi == 0 and norm != 0
        tol = 1e-12 if tol is None else tol
        return abs(psi) <= tol * max(1., abs(norm)) and abs(norm) > tol

    def scaled(self, c):
        return StudyPoint([c * x for x in self.e], [c * x for x in self.f])

    def normalized(self):
        """representative with $N = 1$ and $e_0 \\geq 0$

        Exact if $N$ is the square of a rational, float otherwise.
        """
        norm = self.norm
        if not norm:
            raise ValueError("point on the exceptional cone N = 0")
        root = isqrt_fraction(norm) if self.exact else None
        if root is None:
            root = sqrt(float(norm))
        sign = -1 if self.e[0] < 0 else 1
        return self.scaled(sign / root)

    def as_float(self):
        return StudyPoint([float(x) for x in self.e],
                          [float(x) for x in self.f])

    def transform(self, point):
        """image $\\hat{R}x + t$ of a platform point"""
        rot, t = rotation_translation(self)
        return tuple(sum(r * x for r, x in zip(row, point)) + s
                     for row, s in zip(rot, t))


def rotation_translation(p):
    """rotation matrix and translation vector of a Study point

    :param p: :class:`StudyPoint` with $N \\neq 0$
    :return: tuple (R, t) with R orthogonal of determinant one

    >>> R, t = rotation_translation(StudyPoint((0, 1, 0, 0), (0, 0, 0, 0)))
    >>> [[int(x) for x in row] for row in R]
    [[1, 0, 0], [0, -1, 0], [0, 0, -1]]

    """
    norm = p.norm
    if not norm:
        raise ValueError(f"point {p.coordinates} on the exceptional cone")
    rot = homogeneous_rotation(p.e)
    t = homogeneous_translation(p.e, p.f)
    return [[x / norm for x in row] for row in rot], \
        tuple(x / norm for x in t)


# --- quadratic forms ---

@prettyclass
class QuadraticForm8:
    """homogeneous quadratic polynomial in the Study parameters

    :param matrix: symmetric 8x8 matrix (rows) of Fraction or
        :class:`MultiPoly` entries in the order e0..e3, f0..f3

    The polynomial is $x^T Q x$, so off-diagonal entries carry half of
    the mixed coefficient.
    """

    def __init__(self, matrix):
        matrix = [[_scalar(x) for x in row] for row in matrix]
        if len(matrix) != 8 or any(len(row) != 8 for row in matrix):
            raise ValueError("8x8 matrix required")
        for i in range(8):
            for j in range(i):
                if matrix[i][j] != matrix[j][i]:
                    msg = f"matrix not symmetric at ({i}, {j})"
                    raise ValueError(msg)
        self.matrix = matrix
        self._compiled = None

    @classmethod
    def from_poly(cls, p):
        """from a homogeneous quadratic :class:`MultiPoly` in e0..f3"""
        p = poly(p)
        matrix = [[Fraction(0)] * 8 for _ in range(8)]
        for expv, coeff in collect_coefficients(p, STUDY_VARS).items():
            if coeff.is_zero:
                continue
            if sum(expv) != 2:
                msg = f"homogeneous quadratic required but got term " \
                      f"of degree {sum(expv)} in {p}"
                raise ValueError(msg)
            idx = [i for i, k in enumerate(expv) for _ in range(k)]
            i, j = idx
            if i == j:
                matrix[i][i] = coeff
            else:
                matrix[i][j] = matrix[j][i] = coeff * Fraction(1, 2)
        return cls(matrix)

    @classmethod
    def from_coefficients(cls, coefficients):
        """from a mapping (name, name) -> coefficient of the monomial"""
        matrix = [[Fraction(0)] * 8 for _ in range(8)]
        for (a, b), c in coefficients.items():
            i, j = STUDY_VARS.index(a), STUDY_VARS.index(b)
            c = _scalar(c)
            if i == j:
                matrix[i][i] = matrix[i][i] + c
            else:
                half = c * Fraction(1, 2)
                matrix[i][j] = matrix[i][j] + half
                matrix[j][i] = matrix[j][i] + half
        return cls(matrix)

    def __add__(self, other):
        return QuadraticForm8([[a + b for a, b in zip(r, s)]
                               for r, s in zip(self.matrix, other.matrix)])

    def __sub__(self, other):
        return QuadraticForm8([[a - b for a, b in zip(r, s)]
                               for r, s in zip(self.matrix, other.matrix)])

    def __mul__(self, c):
        return QuadraticForm8([[a * c for a in row] for row in self.matrix])

    __rmul__ = __mul__

    @property
    def symbolic(self):
        """True if some entry depends on design symbols"""
        return any(isinstance(x, MultiPoly) for row in self.matrix
                   for x in row)

    def as_poly(self):
        """expanded :class:`MultiPoly` form"""
        total = MultiPoly(0)
        for i in range(8):
            for j in range(i, 8):
                c = self.matrix[i][j]
                if not c:
                    continue
                c = c if i == j else c * 2
                total = total + E_F[i] * E_F[j] * c
        return total

    def compile(self):
        """float matrix for fast evaluation (numeric entries only)"""
        if self._compiled is None:
            if self.symbolic:
                raise ValueError("cannot compile a form with free symbols")
            self._compiled = array([[float(x) for x in row]
                                    for row in self.matrix], dtype=float)
        return self._compiled

    def evaluate(self, point):
        """value at a point (exact for exact points)

        :param point: :class:`StudyPoint` or sequence of eight numbers
        """
        x = list(point)
        if all(_is_exact(v) for v in x):
            return sum((self.matrix[i][j] * x[i] * x[j]
                        for i in range(8) for j in range(8)
                        if self.matrix[i][j] and x[i] and x[j]),
                       Fraction(0))
        x = asarray(x, dtype=float)
        return float(_dot(x, _dot(self.compile(), x)))

    def gradient(self, point):
        """gradient $2Qx$"""
        x = list(point)
        if all(_is_exact(v) for v in x):
            return [2 * sum((q * v for q, v in zip(row, x)), Fraction(0))
                    for row in self.matrix]
        x = asarray(x, dtype=float)
        return list(2 * _dot(self.compile(), x))


E_F = E + F

PSI = QuadraticForm8.from_coefficients(
    {(f"e{i}", f"f{i}"): 1 for i in range(4)})
NORM = QuadraticForm8.from_coefficients(
    {(f"e{i}", f"e{i}"): 1 for i in range(4)})


def _radius2(value, i):
    if value is None:
        return MultiPoly.variable(radius_symbol(i))
    if isinstance(value, str):
        value = poly(value)
    return _scalar(value)


def sphere_condition(m, M, r2):
    r"""sphere condition of a leg

    :param m: platform anchor $(a, b, c)$
    :param M: base anchor $(A, B, C)$
    :param r2: squared leg length (number, symbol name or MultiPoly)
    :return: :class:`QuadraticForm8` $\Lambda$ with
        $\Lambda = N (\|\hat{R}m + t - M\|^2 - r^2)$

    Anchor coordinates may be rational numbers or polynomials in design
    symbols.
    """
    a, b, c = (_scalar(x) for x in m)
    A, B, C = (_scalar(x) for x in M)
    r2 = _scalar(poly(r2) if isinstance(r2, str) else r2)
    s = a * a + b * b + c * c + A * A + B * B + C * C - r2
    coefficients = {
        ('e0', 'e0'): s - 2 * (a * A + b * B + c * C),
        ('e1', 'e1'): s - 2 * (a * A - b * B - c * C),
        ('e2', 'e2'): s + 2 * (a * A - b * B + c * C),
        ('e3', 'e3'): s + 2 * (a * A + b * B - c * C),
        ('f0', 'f0'): 4, ('f1', 'f1'): 4, ('f2', 'f2'): 4, ('f3', 'f3'): 4,
        ('e0', 'e1'): 4 * (c * B - b * C),
        ('e0', 'e2'): -4 * (c * A - a * C),
        ('e0', 'e3'): 4 * (b * A - a * B),
        ('e1', 'e2'): -4 * (b * A + a * B),
        ('e1', 'e3'): -4 * (c * A + a * C),
        ('e2', 'e3'): -4 * (c * B + b * C),
        ('e0', 'f1'): 4 * (a - A), ('e1', 'f0'): -4 * (a - A),
        ('e0', 'f2'): 4 * (b - B), ('e2', 'f0'): -4 * (b - B),
        ('e0', 'f3'): 4 * (c - C), ('e3', 'f0'): -4 * (c - C),
        ('e3', 'f2'): 4 * (a + A), ('e2', 'f3'): -4 * (a + A),
        ('e1', 'f3'): 4 * (b + B), ('e3', 'f1'): -4 * (b + B),
        ('e2', 'f1'): 4 * (c + C), ('e1', 'f2'): -4 * (c + C),
    }
    return QuadraticForm8.from_coefficients(coefficients)


def _leg(design, i):
    n = len(design.legs)
    if not isinstance(i, int) or not 1 <= i <= n:
        msg = f"leg index must be in 1..{n}, got {i!r}"
        raise ValueError(msg)
    return design.legs[i - 1]


def leg_form(design, i):
    """sphere condition $\\Lambda_i$ of leg **i** (1-based)

    Legs without squared radius use the symbol `R{i}sq`.
    """
    leg = _leg(design, i)
    return sphere_condition(leg.platform, leg.base,
                            _radius2(leg.radius2, i))


def delta(i, j, design):
    """difference $\\Delta_{i,j} = \\Lambda_i - \\Lambda_j$

    The quadratic part in f0..f3 cancels, so the result is linear in
    f0..f3.
    """
    if i == j:
        raise ValueError(f"distinct legs required, got {i} twice")
    li, lj = leg_form(design, i), leg_form(design, j)
    return (li - lj).as_poly()


def psi():
    """Study quadric $\\Psi$ as :class:`MultiPoly`"""
    return PSI.as_poly()


def norm():
    """exceptional cone $N$ as :class:`MultiPoly`"""
    return NORM.as_poly()


def radii_at(design, pose):
    """squared leg lengths of **design** assembled in **pose**"""
    rot, t = rotation_translation(pose)
    radii = []
    for leg in design.legs:
        image = [sum(r * x for r, x in zip(row, leg.platform)) + s
                 for row, s in zip(rot, t)]
        radii.append(sum((x - y) ** 2 for x, y in zip(image, leg.base)))
    return radii


def constraint_jacobian(design, p, radii=None):
    """Jacobian of $(\\Psi, \\Lambda_1, \\ldots, \\Lambda_n)$ at **p**

    :param design: pod design with numeric anchors
    :param p: :class:`StudyPoint`
    :param radii: squared radii (optional: design radii or, if missing,
        the leg lengths at **p**)
    :return: (n+1)x8 matrix as list of rows; exact for exact points
    """
    if radii is None:
        radii = [leg.radius2 for leg in design.legs]
        if any(r is None for r in radii):
            radii = radii_at(design, p)
    rows = [PSI.gradient(p)]
    for leg, r2 in zip(design.legs, radii):
        form = sphere_condition(leg.platform, leg.base, r2)
        rows.append(form.gradient(p))
    return rows
