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

"""named symbolic derivations

Each entry of :data:`REGISTRY` rebuilds one derivation of the
classification from scratch: a symbolic design, an elimination run and
the expected shape of the resulting numerators and resultants.

Numerators are primitive, so a numerator and the resultants built from it
are fixed only up to a rational constant. Such expected polynomials are
compared up to that constant, which is reported. Direct computations
without a normalization step are compared exactly, up to sign. Powers of
parameter factors which are nonzero in the respective case may differ
only where explicitly allowed; the differing multiplicities are
reported.
"""

from itertools import product as cartesian
from logging import getLogger
from os import getenv
from time import perf_counter

from prettyclass import prettyclass

from ..exactalg import E_VARS, MultiPoly, collect_coefficients, \
    factor_list, factor_out, gaussian_divide, gaussian_parts, \
    halve_exponents, poly, proportional, resultant, strip_monomial, \
    substitute, try_exact_divide, try_square_root, variables
from ..geometry import PodDesign
from ..study import E, homogeneous_rotation, radius_symbol
from ..tools.algebra import cross, sub
from .elimination import equation, bonds_on_norm_cone, eliminate_f, \
    parameter_content

_logger = getLogger(__name__)

STATUS = 'pass', 'fail', 'skip'
SHORT = 400

# term counts of the large appendix intermediates as originally reported;
# used as diagnostics only since they depend on normalization
REFERENCE_TERMS = {'G[l1]': 66139, 'G[d31]': 160, 'H3': 170, 'K': 380,
                   'L': 167161, 'U': 497, 'V': 5030,
                   'W1': 44, 'W2': 81, 'W3': 125}

SLOW_ENV = 'PENTAPODS_SLOW'

e0, e1, e2, e3 = E
I, t_ = variables('I t_')
R1, R2, R3, R4, R5 = (MultiPoly.variable(radius_symbol(i))
                      for i in range(1, 6))


def _short(p):
    s = str(p)
    if len(s) > SHORT:
        s = s[:SHORT] + f" ... [{len(poly(p))} terms]"
    return s


def _strip(p, factors):
    """divide each factor out of p as often as possible

    :return: tuple (cofactor, multiplicities)
    """
    counts = []
    for f in factors:
        p, k = factor_out(p, f)
        counts.append(k)
    return p, counts


def _prod(factors):
    result = MultiPoly(1)
    for f in factors:
        result = result * f
    return result


def _e_free(p, names=E_VARS):
    return not any(v in names for v in poly(p).variables)


def _radius_free(p):
    return not any(v.startswith('R') and v.endswith('sq')
                   for v in poly(p).variables)


def quadratic_discriminant(f, var):
    """discriminant of **f** as quadratic polynomial in **var**"""
    c2, c1, c0 = (f.coefficient(var, k) for k in (2, 1, 0))
    return c1 * c1 - 4 * c2 * c0


def negative_multiple(p, positive, squares=()):
    """True if p == -c * s^2 * positive with c > 0 and s a product of
    powers of **squares** with even multiplicity"""
    p, counts = _strip(poly(p), squares)
    if any(k % 2 for k in counts):
        return False
    c = proportional(p, -poly(positive))
    return c is not None and c > 0


def nonvanishing_coefficient(p, names, nonzero=()):
    """key of a coefficient of p (as polynomial in **names**) which is a
    nonzero constant times powers of the **nonzero** factors, or None"""
    for key, c in sorted(collect_coefficients(p, names).items()):
        rest, _ = _strip(c, nonzero)
        if rest.is_constant and not rest.is_zero:
            return key
    return None


def excluded(polys, nonzero, alternatives=()):
    """True if polys have no common complex zero off the given loci

    :param polys: sequence of polynomials
    :param nonzero: factors assumed nonzero
    :param alternatives: sequence of generator tuples, each describing a
        locus where common zeros are allowed
    :return: True if every common zero makes some **nonzero** factor
        vanish or lies in one of the **alternatives**

    For every choice $g$ of one generator per alternative the ideal
    generated by **polys** and $1 - t\\,h\\,g$ must be the unit ideal
    (Rabinowitsch), where $h$ is the product of the nonzero factors.
    """
    from sympy import groebner

    h = _prod(poly(f) for f in nonzero)
    polys = [poly(p) for p in polys if not poly(p).is_zero]
    for choice in cartesian(*alternatives):
        g = h * _prod(poly(x) for x in choice)
        exprs = [p.as_expr() for p in polys] + [(1 - t_ * g).as_expr()]
        gens = sorted({s for e in exprs for s in e.free_symbols}, key=str)
        basis = groebner(exprs, *gens, order='grevlex')
        if list(basis.exprs) != [1]:
            return False
    return True


# --- reporting ---

@prettyclass
class Assertion:
    """outcome of one checked statement of a derivation"""

    def __init__(self, name, status, detail='', expected=None, got=None):
        if status not in STATUS:
            msg = f"status must be one of {STATUS}, got {status!r}"
            raise ValueError(msg)
        self.name = name
        self.status = status
        self.detail = detail
        self.expected = expected
        self.got = got

    def to_dict(self):
        d = {'name': self.name, 'status': self.status}
        if self.detail:
            d['detail'] = self.detail
        if self.status == 'fail' and self.expected is not None:
            d['expected'] = self.expected
            d['got'] = self.got
        return d


@prettyclass
class Reproduction:
    """result of rerunning a registered derivation

    :param id: registry id
    :param statement: what the derivation shows
    :param slow: True for derivations taking minutes or more
    """

    def __init__(self, id, statement='', slow=False):
        self.id = id
        self.statement = statement
        self.slow = slow
        self.traces = []
        self.assertions = []
        self.diagnostics = {}
        self.seconds = None

    @property
    def trace(self):
        return self.traces[0] if self.traces else None

    @property
    def passed(self):
        status = [a.status for a in self.assertions]
        return 'pass' in status and 'fail' not in status

    @property
    def status(self):
        status = [a.status for a in self.assertions]
        if status and all(s == 'skip' for s in status):
            return 'skip'
        return 'pass' if self.passed else 'fail'

    def add(self, trace):
        self.traces.append(trace)
        return trace

    def check(self, name, ok, detail='', expected=None, got=None):
        status = 'pass' if ok else 'fail'
        self.assertions.append(Assertion(name, status, detail,
                                         expected, got))
        if ok:
            _logger.debug(f"{self.id}: {name} passed")
        else:
            _logger.warning(f"{self.id}: {name} failed {detail}".rstrip())
        return bool(ok)

    def skip(self, name, detail):
        self.assertions.append(Assertion(name, 'skip', detail))
        _logger.info(f"{self.id}: {name} skipped ({detail})")

    def compare(self, name, got, target, allowed=(), exact=False):
        """check got == c * target

        :param allowed: parameter factors, nonzero in the case, whose
            powers may differ between **got** and **target**; the
            stripped multiplicities are reported
        :param exact: require c = 1 or c = -1
        :return: the constant c or None
        """
        got, target = poly(got), poly(target)
        for f in allowed:
            if not _e_free(f):
                raise ValueError(f"allowed factor {f} depends on e")
        stripped, k_got = _strip(got, allowed)
        reference, k_target = _strip(target, allowed)
        c = proportional(stripped, reference)
        ok = c is not None and c != 0 and (not exact or c in (1, -1))
        if c is None:
            detail = 'not proportional'
        else:
            detail = f"constant {c}"
        powers = [f"({f})^{i}/{j}" for f, i, j in
                  zip(allowed, k_got, k_target) if i != j]
        if powers:
            detail += f", powers got/expected {', '.join(powers)}"
        self.check(name, ok, detail, _short(target), _short(got))
        return c if ok else None

    def excludes(self, name, polys, nonzero, alternatives=()):
        """check :func:`excluded`, a common zero off the loci fails"""
        ok = excluded(polys, nonzero, alternatives)
        self.check(name, ok, '' if ok else
                   'common zero off the nonzero and alternative loci')
        return ok

    def divides(self, name, p, d):
        """check d divides p, return the cofactor or None"""
        q = try_exact_divide(poly(p), poly(d))
        self.check(name, q is not None, '' if q is not None else
                   'not divisible', f"multiple of {_short(d)}", _short(p))
        return q

    def verdict(self, trace, expected, var='e0'):
        got = bonds_on_norm_cone(trace, var)
        self.check(f"bonds of {trace.id}: {expected}", got == expected,
                   f"verdict {got}", expected, got)
        return got

    def to_dict(self):
        return {
            'id': self.id,
            'statement': self.statement,
            'status': self.status,
            'assertions': [a.to_dict() for a in self.assertions],
            'seconds': self.seconds,
            'traces': [t.to_dict() for t in self.traces],
            'diagnostics': dict(self.diagnostics),
        }


REGISTRY = {}


def register(computation_id, statement, slow=False):
    """decorator adding a derivation to :data:`REGISTRY`"""
    def decorator(func):
        func.statement = statement
        func.slow = slow
        REGISTRY[computation_id] = func
        return func
    return decorator


def reproduce(computation_id, with_cross_resultant=False):
    """rerun a registered derivation and check its assertions

    :param computation_id: key of :data:`REGISTRY`
    :param with_cross_resultant: also compute the resultant of the two
        appendix numerators against each other, which shows that the
        parameter pseudo-factor V of L does not belong to a common
        curve (hours)
    :return: :class:`Reproduction`; its `trace` is the main
        :class:`EliminationTrace`
    """
    if computation_id not in REGISTRY:
        msg = f"unknown computation id {computation_id!r}, " \
              f"registry: {', '.join(REGISTRY)}"
        raise ValueError(msg)
    func = REGISTRY[computation_id]
    rep = Reproduction(computation_id, func.statement, func.slow)
    _logger.info(f"reproduce {computation_id}")
    start = perf_counter()
    func(rep, with_cross_resultant=with_cross_resultant)
    rep.seconds = round(perf_counter() - start, 3)
    _logger.info(f"{computation_id}: {rep.status} in {rep.seconds:.2f}s")
    return rep


def slow_enabled():
    """True if the test suite should run the slow derivations

    :func:`reproduce` itself always runs the derivation asked for.
    """
    return getenv(SLOW_ENV, '').lower() not in ('', '0', 'false', 'no')


# --- planar platform and base with two space legs ---

a3, b3, a4, b4, c4, a5, b5, c5 = \
    variables('a3 b3 a4 b4 c4 a5 b5 c5')


@register('sec3.1-case2',
          'reflection-symmetric legs 4, 5 give no bonds off R1 = R2')
def _planar_pairs_reflected(rep, **_):
    design = PodDesign([
        ((0, 0, 0), (0, 0, 0)),
        ((1, 0, 0), (1, 0, 0)),
        ((a3, b3, 0), (a3, b3, 0)),
        ((a4, b4, -c4), (a4, b4, c4)),
        ((a5, b5, -c5), (a5, b5, c5))], name='sec3.1-case2')
    trace = rep.add(eliminate_f(
        design, ['psi', 'd31'], ['f1', 'f3'], ['d21', 'd41', 'd51'],
        orientation={'e2': 0, 'e3': 0}, name='sec3.1-case2'))
    cone = e0 ** 2 + e1 ** 2
    g = trace.numerators
    rep.compare('G2 = N (R1 - R2)', g['d21'], cone * (R1 - R2))

    h4 = resultant(g['d41'], cone, 'e0')
    trace.resultants['d41'] = h4
    target = b3 ** 2 * e1 ** 6 * (b4 ** 2 + c4 ** 2) * \
        ((b3 - b4) ** 2 + c4 ** 2)
    rep.compare('res(G4, N, e0)', h4, target, allowed=(b3, c4))
    rep.check('res(G4, N, e0) free of radii', _radius_free(h4))

    same = rep.add(eliminate_f(
        design, ['psi', 'd31'], ['f1', 'f3'], ['d21', 'd41', 'd51'],
        orientation={'e2': 0, 'e3': 0}, parameters={'R2sq': R1},
        name='sec3.1-case2 R1 = R2'))
    rep.check('G2 vanishes for R1 = R2', same.numerators['d21'].is_zero)
    rep.verdict(same, 'bonds-empty')


@register('sec3.1-case1',
          'planar legs 1, 2, 3 force a4 to be non-real on both branches')
def _planar_triangle(rep, **_):
    design = PodDesign([
        ((0, 0, 0), (0, 0, 0)),
        ((1, 0, 0), (1, 0, 0)),
        ((a3, b3, 0), (a3, b3, 0)),
        ((a4, b4, -c4), (a4, b4, c4)),
        ((a5, b5, -c5), (a5, b5, c5))], name='sec3.1-case1')
    trace = rep.add(eliminate_f(
        design, ['psi', 'd21'], ['f2', 'f3'], ['d31', 'd41', 'd51'],
        orientation={'e3': 0}, name='sec3.1-case1'))
    cone = e0 ** 2 + e1 ** 2 + e2 ** 2
    g = trace.numerators
    h3 = resultant(g['d31'], cone, 'e0')
    h4 = resultant(g['d41'], cone, 'e0')
    trace.resultants.update({'d31': h3, 'd41': h4})

    first = b3 * e1 - a3 * e2
    second = b3 * e1 - (a3 - 1) * e2
    q = rep.divides('res(G3, N, e0) has both double line factors',
                    h3, first ** 2 * second ** 2)
    if q is not None:
        rest, _ = strip_monomial(q, E_VARS)
        rep.check('remaining factor of res(G3, N, e0) is monomial in e',
                  _e_free(rest), got=_short(q))

    branches = (
        ('e1 = a3 e2 / b3', (a3 * e2, b3), c4 ** 2 * (a3 ** 2 + b3 ** 2)),
        ('e1 = (a3 - 1) e2 / b3', ((a3 - 1) * e2, b3),
         c4 ** 2 * ((a3 - 1) ** 2 + b3 ** 2)))
    for label, value, positive in branches:
        num, _ = substitute(h4, {'e1': value})
        num, _ = strip_monomial(num, E_VARS)
        if not rep.check(f"res(G4, N, e0) on {label} is monomial in e",
                         _e_free(num)):
            continue
        quadratics, others = [], []
        for f, _ in factor_list(num)[1]:
            if f.degree('a4') == 2:
                quadratics.append(f)
            elif f.degree('a4'):
                others.append(f)
        ok = bool(quadratics) and not others and all(
            negative_multiple(quadratic_discriminant(f, 'a4'), positive,
                              (b3,)) for f in quadratics)
        rep.check(f"no real a4 on {label}", ok,
                  f"{len(quadratics)} quadratic factors in a4, "
                  f"{len(others)} other")


# --- translational and Schoenflies motions ---

a2, A2, A3, B2, B3, k = variables('a2 A2 A3 B2 B3 k')


@register('sec4.1-case1',
          'translational self-motions need congruent triangles '
          'or at most two orientations')
def _translational_orientations(rep, **_):
    rot = homogeneous_rotation((e0, 0, 0, e3))
    n = e0 ** 2 + e3 ** 2
    m2, M2 = (a2, 0, 0), (A2, 0, 0)
    m3, M3 = (a3, b3, 0), (A3, B3, 0)

    def moved(m, M):
        return [sum((r * x for r, x in zip(row, m)), MultiPoly(0)) -
                n * M[i] for i, row in enumerate(rot)]

    u = cross(moved(m2, M2), moved(m3, M3))
    bracket = (A2 - a2) * (B3 - b3) * e0 ** 2 + \
        (a2 + A2) * (b3 + B3) * e3 ** 2 + 2 * (a2 * A3 - A2 * a3) * e0 * e3
    rep.check('cross product is vertical',
              poly(u[0]).is_zero and poly(u[1]).is_zero)
    c = rep.compare('z-component = N (bracket)', u[2], n * bracket,
                    exact=True)
    rep.diagnostics['constant'] = str(c)
    congruent = bracket.subs({'A2': a2, 'A3': a3, 'B3': b3})
    rep.compare('congruent triangles leave the double root e3 = 0',
                congruent, 4 * a2 * b3 * e3 ** 2, exact=True)
    mirrored = bracket.subs({'A2': a2, 'A3': a3, 'B3': -b3})
    rep.check('bracket vanishes for mirrored triangles', mirrored.is_zero)
    rep.check('bracket is a binary quadratic form',
              bracket.is_homogeneous(('e0', 'e3')) and
              bracket.total_degree(('e0', 'e3')) == 2)


@register('sec4.1-schoenflies',
          'collinear base and platform points along the same axis '
          'give no bonds')
def _schoenflies(rep, **_):
    bs = variables('B2 B3 B4 B5')
    legs = [((0, 0, 0), (0, 0, 0))] + \
        [((0, k * b, 0), (0, b, 0)) for b in bs]
    design = PodDesign(legs, name='sec4.1-schoenflies')
    trace = rep.add(eliminate_f(
        design, ['psi', 'd21'], ['f1', 'f3'], ['d31', 'd41', 'd51'],
        orientation={'e2': 0, 'e3': 0}, name='sec4.1-schoenflies'))
    cone = e0 ** 2 + e1 ** 2
    rep.check('numerators free of f', all(
        _e_free(g, ('f0', 'f1', 'f2', 'f3'))
        for g in trace.numerators.values()))
    for i, b in zip((3, 4, 5), bs[1:]):
        h = resultant(trace.numerators[f"d{i}1"], cone, 'e1')
        trace.resultants[f"d{i}1"] = h
        target = k ** 2 * B2 ** 2 * b ** 2 * (B2 - b) ** 2 * e0 ** 4
        rep.compare(f"res(G{i}, N, e1)", h, target)
        rep.check(f"res(G{i}, N, e1) free of radii", _radius_free(h))
    rep.verdict(trace, 'bonds-empty', var='e1')


# --- planar designs with congruent platform and base ---

A4, A5 = variables('A4 A5')


def _collinearity(p, q, r):
    """z-component of (q - p) x (r - p) for planar points"""
    return poly(cross(sub(q, p), sub(r, p))[2])


@register('sec4.2-case1',
          'the double factor of res(G3) splits into two branches '
          'both forcing collinear anchors')
def _planar_congruent(rep, **_):
    M = [(0, 0, 0), (1, 0, 0), (0, B3, 0), (A4, A4, 0), (A5, -A5, 0)]
    design = PodDesign([(p, p) for p in M], name='sec4.2-case1')
    trace = rep.add(eliminate_f(
        design, ['psi', 'd21'], ['f2', 'f3'], ['d31', 'd41', 'd51'],
        orientation={'e3': 0}, name='sec4.2-case1'))
    cone = e0 ** 2 + e1 ** 2 + e2 ** 2
    h = {i: resultant(trace.numerators[f"d{i}1"], cone, 'e0')
         for i in (3, 4, 5)}
    trace.resultants.update({f"d{i}1": v for i, v in h.items()})
    rep.compare('res(G3, N, e0)', h[3],
                B3 ** 2 * e1 ** 2 * e2 ** 2 * (B3 * e1 + e2) ** 2,
                allowed=(B3,))

    for i, a in ((4, A4), (5, A5)):
        rep.compare(f"res(G{i}, N, e0) at e1 = 0", h[i].subs({'e1': 0}),
                    e2 ** 6 * a ** 2 * (a - 1) ** 2, allowed=(B3,))
    rep.check('A4 = A5 = 1 makes M2, M4, M5 collinear',
              _collinearity(M[1], M[3], M[4]).subs(
                  {'A4': 1, 'A5': 1}).is_zero)

    factor4 = B3 * A4 - B3 + A4
    factor5 = B3 * A5 - B3 - A5
    h4, _ = substitute(h[4], {'e1': (-e2, B3)})
    h5, _ = substitute(h[5], {'e1': (-e2, B3)})
    rep.compare('res(G4, N, e0) at e1 = -e2 / B3', h4,
                A4 ** 2 * e2 ** 6 * (B3 + 1) ** 2 * factor4 ** 2,
                allowed=(B3,))
    rep.compare('res(G5, N, e0) at e1 = -e2 / B3', h5,
                A5 ** 2 * e2 ** 6 * (B3 - 1) ** 2 * factor5 ** 2,
                allowed=(B3,))
    printed = B3 * A5 - B3 + A5
    rep.check('factor of res(G5) is B3 A5 - B3 - A5, not B3 A5 - B3 + A5',
              try_exact_divide(h5, printed) is None)
    rep.compare('B3 A4 - B3 + A4 = 0 iff M2, M3, M4 collinear',
                _collinearity(M[1], M[2], M[3]), factor4, exact=True)
    rep.compare('B3 A5 - B3 - A5 = 0 iff M2, M3, M5 collinear',
                _collinearity(M[1], M[2], M[4]), factor5, exact=True)


@register('sec4.2-case1b',
          'the isotropic orientation (1 : i : 0 : 0) forces '
          'collinear M3, M4, M5')
def _planar_isotropic(rep, **_):
    M = [(0, 0, 0), (1, 0, 0), (0, B3, 0), (A4, A4, 0), (A5, -A5, 0)]
    design = PodDesign([(p, p) for p in M], name='sec4.2-case1b')
    orientation = {'e0': 1, 'e1': I, 'e2': 0, 'e3': 0}
    trace = rep.add(eliminate_f(
        design, ['psi', 'd31'], ['f1', 'f3'], [],
        orientation=orientation, name='sec4.2-case1b'))
    f0 = MultiPoly.variable('f0')
    f1, n1 = gaussian_divide(*trace.solved['f1'])
    f3, n3 = gaussian_divide(*trace.solved['f3'])
    rep.check('f1 = i f0', f1 == I * f0 * n1, got=f"{f1} / {n1}")
    rep.check('f3 = -i B3 / 2', 2 * f3 == -I * B3 * n3,
              got=f"{f3} / {n3}")

    solution = {'f1': (I * f0, 1), 'f3': (-I * B3, 2)}
    for i, target in ((4, A4 * (B3 - A4)), (5, A5 * (A5 + B3))):
        p, _ = substitute(equation(design, f"d{i}1"), orientation)
        p, _ = substitute(p, solution)
        re, im = gaussian_parts(p)
        rep.check(f"D{i}1 has no imaginary part", im.is_zero,
                  got=_short(im))
        rep.compare(f"D{i}1 at the isotropic orientation", re, target)
    line = _collinearity(M[2], M[3], M[4]).subs(
        {'A4': B3, 'A5': -B3})
    rep.check('A4 = B3, A5 = -B3 makes M3, M4, M5 collinear',
              line.is_zero)


@register('sec4.2-case2a',
          'opposite pairs M2, M3 and M4, M5 leave only the condition '
          'G2 = 4 e2^2 for equal radii')
def _planar_opposite(rep, **_):
    M = [(0, 0, 0), (1, 0, 0), (-1, 0, 0), (A4, 1, 0), (-A4, -1, 0)]
    design = PodDesign([(p, p) for p in M], name='sec4.2-case2a')
    targets = ['d21', 'd41+d51', 'd45']
    trace = rep.add(eliminate_f(
        design, ['psi', 'd23'], ['f2', 'f3'], targets,
        orientation={'e3': 0}, name='sec4.2-case2a'))
    cone = e0 ** 2 + e1 ** 2 + e2 ** 2
    h5 = (R3 - R2) * e1 + (R5 - R4 - A4 * (R3 - R2)) * e2
    rep.compare('G5 = N (linear form)', trace.numerators['d45'], cone * h5)

    pairs = {'R2sq': R3, 'R4sq': R5}
    equal = rep.add(eliminate_f(
        design, ['psi', 'd23'], ['f2', 'f3'], targets,
        orientation={'e3': 0}, parameters=pairs,
        name='sec4.2-case2a R2 = R3, R4 = R5'))
    g = equal.numerators
    rep.check('G5 vanishes for R2 = R3, R4 = R5', g['d45'].is_zero)
    r = resultant(g['d21'], g['d41+d51'], 'e0')
    equal.resultants['d21, d41+d51'] = r
    line = (R1 - R3) * e1 ** 2 + \
        (A4 ** 2 * (R1 - R3) - R1 + R5) * e2 ** 2 - \
        2 * A4 * (R1 - R3) * e1 * e2
    rep.compare('res(G2, G4, e0) = L^2', r, line ** 2)

    last = rep.add(eliminate_f(
        design, ['psi', 'd23'], ['f2', 'f3'], targets,
        orientation={'e3': 0}, parameters=dict(pairs, R1sq=R3),
        name='sec4.2-case2a R1 = R2 = R3, R4 = R5'))
    rep.compare('G2 = 4 e2^2 for R1 = R3', last.numerators['d21'],
                4 * e2 ** 2)
    rep.verdict(last, 'bonds-empty')


@register('sec4.2-case2b',
          'parallel pair M4, M5 leaves only G2 = 4 e2^2 for '
          'R1 = (R2 + R3) / 2')
def _planar_parallel(rep, **_):
    M = [(0, 0, 0), (1, 0, 0), (-1, 0, 0), (0, 1, 0), (1, 1, 0)]
    design = PodDesign([(p, p) for p in M], name='sec4.2-case2b')
    trace = rep.add(eliminate_f(
        design, ['psi', 'd23'], ['f2', 'f3'], ['d21', 'd45'],
        orientation={'e3': 0}, name='sec4.2-case2b'))
    g = trace.numerators
    r = resultant(g['d21'], g['d45'], 'e0')
    trace.resultants['d21, d45'] = r
    target = e2 ** 2 * ((2 * R1 - R2 - R3) * e1 -
                        (R1 - R2 + R5 - R4) * e2) ** 2
    rep.compare('res(G2, G5, e0)', r, target)

    mean = rep.add(eliminate_f(
        design, ['psi', 'd23'], ['f2', 'f3'], ['d21', 'd45'],
        orientation={'e3': 0}, parameters={'R1sq': (R2 + R3, 2)},
        name='sec4.2-case2b R1 = (R2 + R3) / 2'))
    rep.compare('G2 = 4 e2^2', mean.numerators['d21'], 4 * e2 ** 2)
    rep.verdict(mean, 'bonds-empty')


# --- planar designs, appendix ---

a, B, b2 = variables('a B b2')
e3bar = MultiPoly.variable('e3bar')
T = (a ** 2 + b4 ** 2) * (b2 ** 2 + b3 ** 2) - \
    2 * a * b2 * b3 * (b2 - b3) - 2 * b2 * b3 * b4 * (b2 + b3) + \
    2 * b2 ** 2 * b3 ** 2
NONZERO = (a, B, b4 - b5, B * b2 + b4 - b5)


def _appendix_design(name):
    return PodDesign([
        ((0, 0, 0), (0, 0, 0)),
        ((0, b2, 0), (0, 1, 0)),
        ((0, b3, 0), (0, -1, 0)),
        ((a, b4, 0), (1, 0, 0)),
        ((a, b5, 0), (1, B, 0))], name=name)


def _check_t_branch(rep, h3bar, kbar):
    """the only real solution of T = 0 gives no common curve"""
    d = b2 ** 2 + b3 ** 2
    re = b2 * b3 * (b2 - b3)
    im = b2 ** 2 * (b3 - b4) + b3 ** 2 * (b2 - b4)
    for sign in (1, -1):
        num, _ = substitute(T, {'a': (re + sign * I * im, d)})
        parts = gaussian_parts(num)
        rep.check(f"T = 0 at a = (re {'+-'[sign < 0]} i im) / d",
                  all(p.is_zero for p in parts))
    b4t = (b2 * b3 * (b2 + b3), d)
    num, _ = substitute(im, {'b4': b4t})
    rep.check('imaginary part vanishes for real b4', num.is_zero)

    values = {'a': (re, d), 'b4': b4t,
              'B': (2 * (b2 - b3), b2 + b3),
              'b5': ((3 * b2 ** 2 - 2 * b2 * b3 + 3 * b3 ** 2) * b2 * b3,
                     (b2 + b3) * d)}
    num, _ = substitute(T, {v: values[v] for v in ('a', 'b4')})
    rep.check('T vanishes on the real branch', num.is_zero)
    allowed = (b2 + b3, d)
    h3t, _ = substitute(h3bar, values)
    rep.check('H3 free of e3bar on the real branch',
              h3t.degree('e3bar') == 0)
    rep.compare('H3 on the real branch', h3t,
                e1 ** 2 * e2 ** 2 * b2 ** 2 * b3 ** 2 * (b2 - b3) ** 4,
                allowed=allowed)
    kt, _ = substitute(kbar, values)
    q = b2 ** 2 - b2 * b3 + 2 * b3 ** 2
    for v in ('e1', 'e2'):
        rep.divides(f"K at {v} = 0 has factor b2^2 - b2 b3 + 2 b3^2",
                    kt.subs({v: 0}), q)
    rep.compare('b2^2 - b2 b3 + 2 b3^2 has negative discriminant',
                quadratic_discriminant(q, 'b2'), -7 * b3 ** 2, exact=True)


def quartic_split(c):
    """(U, V) with c = U V, V the content of c in e1, e2

    The cofactor of the monomial part of L is a binary form in e1, e2;
    its coefficient content V is the parameter pseudo-factor and the
    primitive part U the relevant quartic.
    """
    v, u = parameter_content(c, ('e1', 'e2'))
    return u, v


def _check_quartic(rep, u, v):
    """check the shape of the quartic U and its coefficient resultants"""
    rep.check('U is a binary quartic in e1, e2',
              u.is_homogeneous(('e1', 'e2')) and
              u.total_degree(('e1', 'e2')) == 4 and
              _e_free(u, ('e0', 'e3', 'e3bar')), got=_short(u))
    rep.diagnostics.update({'U terms': len(u), 'V terms': len(v)})

    coeffs = collect_coefficients(u, ('e1', 'e2'))
    u40, u04 = coeffs.get((4, 0)), coeffs.get((0, 4))
    u31, u13 = coeffs.get((3, 1)), coeffs.get((1, 3))
    rep.check('U40 = U04', u40 is not None and u40 == u04)
    rep.check('U31 = -U13', u31 is not None and u13 is not None and
              u31 == -u13)
    w1 = rep.divides('(b2 + b3)^2 divides U40', u40, (b2 + b3) ** 2)
    w2 = rep.divides('b2 + b3 divides U31', u31, b2 + b3)
    w3 = coeffs.get((2, 2), MultiPoly(0))
    if w1 is None or w2 is None:
        return
    rep.diagnostics.update({'W1 terms': len(w1), 'W2 terms': len(w2),
                            'W3 terms': len(w3)})
    rep.compare('W3 at b2 = -b3', w3.subs({'b2': -b3}),
                b3 ** 2 * (-B * b3 + b4 - b5) ** 2)

    gcd_target = a * B ** 4 * (b2 + b3) ** 2 * b2 * b3 * (b2 - b3) * T
    w = {1: w1, 2: w2, 3: w3}
    for m, (i, j) in ((1, (2, 3)), (2, (1, 3)), (3, (1, 2))):
        e = resultant(w[i], w[j], 'b5')
        rep.diagnostics[f"E{m} terms"] = len(e)
        rep.divides(f"E{m} has the common factor", e, gcd_target)

    zero = {i: w[i].subs({'b2': 0}) for i in w}
    rep.divides('W1 at b2 = 0 vanishes only for b5 = -a or b4 = -Ba - a',
                zero[1], (b5 + a) * (b4 + B * a + a))
    w2a = zero[2].subs({'b5': -a})
    rep.divides('W2 at b2 = 0, b5 = -a forces b4 = -Ba - a',
                w2a, b4 + B * a + a)
    rep.compare('W3 at b2 = 0, b5 = -a, b4 = -Ba - a',
                zero[3].subs({'b5': -a}).subs({'b4': -B * a - a}),
                B ** 2 * a ** 3 * b3 ** 4 * (B ** 2 + 2 * B + 2))
    w2b, _ = _strip(zero[2].subs({'b4': -B * a - a}),
                    (a, B, b3, b5 + a))
    rep.check('W2 at b2 = 0, b4 = -Ba - a contradicts b5 != -a',
              w2b.is_constant and not w2b.is_zero, got=_short(w2b))


@register('appendix-general',
          'a planar design with three collinear base anchors has no '
          'curve of bonds in the general orientation case', slow=True)
def _appendix_general(rep, with_cross_resultant=False):
    design = _appendix_design('appendix-general')
    trace = rep.add(eliminate_f(
        design, ['psi', 'd21', 'd41', 'd51'], ('f0', 'f1', 'f2', 'f3'),
        ['l1', 'd31'], name='appendix-general'))
    n = e0 ** 2 + e1 ** 2 + e2 ** 2 + e3 ** 2
    g1, g3 = trace.numerators['l1'], trace.numerators['d31']
    h1 = resultant(g1, n, 'e0')
    h3 = resultant(g3, n, 'e0')
    trace.resultants.update({'l1': h1, 'd31': h3})
    constant, prim = h1.primitive()
    kk = try_square_root(prim)
    if not rep.check('res(G1, N, e0) is a square', kk is not None,
                     f"content {constant}"):
        return
    h3bar = halve_exponents(h3, 'e3', 'e3bar')
    kbar = halve_exponents(kk, 'e3', 'e3bar')
    if not rep.check('only even powers of e3 in H3 and K',
                     h3bar is not None and kbar is not None):
        return
    rep.diagnostics.update({'H3 terms': len(h3), 'K terms': len(kk)})
    _check_t_branch(rep, h3bar, kbar)

    ll = resultant(h3bar, kbar, 'e3bar')
    rep.diagnostics['L terms'] = len(ll)
    monomial = e1 ** 4 * e2 ** 4 * a ** 2 * B * (b4 - b5) * \
        (B * b2 + b4 - b5) ** 2
    c = rep.divides('L has the factor e1^4 e2^4 a^2 B (b4 - b5) '
                    '(B b2 + b4 - b5)^2', ll, monomial)
    if c is None:
        return
    u, v = quartic_split(c)
    _check_quartic(rep, u, v)
    rep.diagnostics['reference terms'] = dict(REFERENCE_TERMS)

    name = 'V does not divide the cross resultant'
    if not with_cross_resultant:
        rep.skip(name, 'requires --with-footnote7')
        return
    g13 = resultant(g1, g3, 'e0')
    g13bar = halve_exponents(g13, 'e3', 'e3bar')
    if not rep.check('only even powers of e3 in res(G1, G3, e0)',
                     g13bar is not None):
        return
    l2 = resultant(g13bar, h3bar, 'e3bar')
    rep.diagnostics['cross resultant terms'] = len(l2)
    rep.check(name, not v.is_constant and try_exact_divide(l2, v) is None)


@register('appendix-special-1a',
          'special orientation, no congruence: the coefficients of K2, '
          'K3 have no admissible common zero', slow=True)
def _appendix_special_1a(rep, **_):
    design = _appendix_design('appendix-special-1a')
    orientation = {'e3': (e0 * e1 * (a - 1), e2 * (a + 1))}
    trace = rep.add(eliminate_f(
        design, ['psi', 'd41', 'd51'], ('f1', 'f2', 'f3'),
        ['d21', 'd31'], orientation=orientation,
        name='appendix-special-1a'))
    cone, _ = substitute(e0 ** 2 + e1 ** 2 + e2 ** 2 + e3 ** 2, orientation)
    coefficients = []
    for i in (2, 3):
        h = resultant(trace.numerators[f"d{i}1"], cone, 'e0')
        trace.resultants[f"d{i}1"] = h
        rest, _ = strip_monomial(h, ('e1', 'e2'))
        rest, _ = _strip(rest, (a,))
        _, rest = rest.primitive()
        kk = try_square_root(rest)
        if not rep.check(f"res(G{i}, N, e0) = a^2 e1^2 e2^2 K{i}^2",
                         kk is not None, got=_short(h)):
            return
        coefficients.extend(collect_coefficients(kk, ('e1', 'e2')).values())
    nonzero = NONZERO + (a + 1,)
    rep.excludes('coefficients of K2, K3 have no admissible common zero',
                 coefficients, nonzero,
                 [(a - 1, b4, b5 - B), (b2, b3)])


@register('appendix-special-1b',
          'special orientation with congruent anchors 4, 5 '
          'forces collinear platform anchors')
def _appendix_special_1b(rep, **_):
    design = _appendix_design('appendix-special-1b')
    parameters = {'a': 1, 'b4': 0, 'b5': B}
    trace = rep.add(eliminate_f(
        design, ['psi', 'd21', 'd51'], ('f1', 'f2', 'f3'), ['d41'],
        orientation={'e3': 0}, parameters=parameters,
        name='appendix-special-1b'))
    cone = e0 ** 2 + e1 ** 2 + e2 ** 2
    h4 = resultant(trace.numerators['d41'], cone, 'e0')
    trace.resultants['d41'] = h4
    rep.compare('res(G4, N, e0)', h4,
                B ** 2 * e1 ** 2 * e2 ** 2 * (B * e1 - e2) ** 2,
                allowed=(B, b2, b3, b2 - b3, b2 + b3))
    key = nonvanishing_coefficient(h4, ('e1', 'e2'),
                                   (B, b2, b3, b2 - b3, b2 + b3))
    rep.check('res(G4, N, e0) has a coefficient which cannot vanish',
              key is not None, f"coefficient of e1^i e2^j at {key}")


@register('appendix-special-2a',
          'orientation with e2 = 0, no congruence: no admissible '
          'common zero', slow=True)
def _appendix_special_2a(rep, **_):
    design = _appendix_design('appendix-special-2a')
    trace = rep.add(eliminate_f(
        design, ['psi', 'd41', 'd51'], None, ['d21', 'd31'],
        orientation={'e2': 0}, parameters={'a': 1},
        name='appendix-special-2a'))
    rep.diagnostics['solved for'] = list(trace.solve_for)
    cone = e0 ** 2 + e1 ** 2 + e3 ** 2
    coefficients = []
    for i in (2, 3):
        h = resultant(trace.numerators[f"d{i}1"], cone, 'e0')
        trace.resultants[f"d{i}1"] = h
        coefficients.extend(collect_coefficients(h, ('e1', 'e3')).values())
    rep.excludes('resultant coefficients have no admissible common zero',
                 coefficients, NONZERO[1:], [(b4, b5 + B), (b2, b3)])


@register('appendix-special-2b',
          'orientation with e2 = 0 and reflected anchors 4, 5 '
          'leaves a coefficient which cannot vanish')
def _appendix_special_2b(rep, **_):
    design = _appendix_design('appendix-special-2b')
    trace = rep.add(eliminate_f(
        design, ['psi', 'd21', 'd51'], None, ['d41'],
        orientation={'e2': 0}, parameters={'a': 1, 'b4': 0, 'b5': -B},
        name='appendix-special-2b'))
    rep.diagnostics['solved for'] = list(trace.solve_for)
    cone = e0 ** 2 + e1 ** 2 + e3 ** 2
    h4 = resultant(trace.numerators['d41'], cone, 'e0')
    trace.resultants['d41'] = h4
    rep.check('res(G4, N, e0) is not zero', not h4.is_zero)
    key = nonvanishing_coefficient(h4, ('e1', 'e3'),
                                   (B, b2, b3, b2 - b3, b2 + b3))
    rep.check('res(G4, N, e0) has a coefficient which cannot vanish',
              key is not None, f"coefficient of e1^i e3^j at {key}")
