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

"""projected bond elimination

A trace starts from a (possibly symbolic) design and a set of equations
among $\\Psi$, the sphere conditions $\\Lambda_i$ and their differences
$\\Delta_{i,j}$. Equations linear in some Study parameters $f_k$ are
solved by Cramer's rule, the solutions are substituted into further
target equations and the numerators $G_i$ are collected. The bonds are
then the common zeros of the $G_i$ on the exceptional cone $N = 0$.
"""

from fractions import Fraction
from itertools import combinations
from logging import getLogger
from re import compile as _compile, split as _split
from time import perf_counter

from prettyclass import prettyclass

from ..exactalg import E_VARS, F_VARS, MultiPoly, collect_coefficients, \
    factor_list, factor_out, gcd, isqrt_fraction, poly, resultant, \
    strip_monomial, substitute, try_exact_divide
from ..study import E, homogeneous_rotation, leg_form, norm, psi, \
    translation_to_f
from ..tools.algebra import cramer, determinant
from ..tools.constant import is_zero, text

_logger = getLogger(__name__)

VERDICTS = 'bonds-empty', 'finite-bonds', 'inconclusive', 'bonding-curve'
_RANK = {v: i for i, v in enumerate(VERDICTS)}

_TOKEN = _compile(r'psi|n|l([1-6])|d([1-6])([1-6])')


@prettyclass
class EliminationTrace:
    """record of one elimination run

    :param id: name of the run (registry id or user label)
    :param equations: names of the solved equations
    :param solve_for: solved Study parameters

    The trace collects

    * `solved`: mapping f-variable -> (numerator, denominator)
    * `numerators`: mapping target name -> $G$ (MultiPoly)
    * `resultants`: mapping name -> resultant (MultiPoly)
    * `factors`: mapping name -> (constant, [(factor, multiplicity)]),
      each re-multiplied against its product when recorded
    * `assumptions`: polynomials assumed nonzero (pivot factors)
    * `conditions`: side conditions in text form
    * `verdict` and `bonds` as set by :func:`bonds_on_norm_cone`
    * `diagnostics`: term counts and timings
    """

    def __init__(self, id, equations=(), solve_for=()):
        self.id = id
        self.equations = tuple(equations)
        self.solve_for = tuple(solve_for)
        self.orientation = {}
        self.parameters = {}
        self.solved = {}
        self.pivot = MultiPoly(1)
        self.numerators = {}
        self.resultants = {}
        self.factors = {}
        self.assumptions = []
        self.conditions = []
        self.verdict = None
        self.bonds = []
        self.diagnostics = {}

    def record_factorization(self, name, product, constant, factors):
        """store a factorization after checking it re-multiplies exactly"""
        check = MultiPoly(constant)
        for f, k in factors:
            check = check * poly(f) ** k
        if check != poly(product):
            msg = f"factorization of {name} does not re-multiply " \
                  f"to the recorded product"
            raise ValueError(msg)
        self.factors[name] = Fraction(constant), \
            [(poly(f), k) for f, k in factors]

    def assume(self, p, reason=''):
        p = poly(p)
        if p.is_constant:
            return
        if p not in self.assumptions:
            self.assumptions.append(p)
            self.conditions.append(f"{p} != 0" + (f" ({reason})"
                                                  if reason else ''))

    @property
    def term_counts(self):
        counts = {f"G[{k}]": len(v) for k, v in self.numerators.items()}
        counts.update({f"H[{k}]": len(v) for k, v in self.resultants.items()})
        return counts

    def to_dict(self):
        return {
            'id': self.id,
            'equations': list(self.equations),
            'solve_for': list(self.solve_for),
            'solved': {v: [str(n), str(d)]
                       for v, (n, d) in self.solved.items()},
            'numerators': {k: str(v) for k, v in self.numerators.items()},
            'resultants': {k: str(v) for k, v in self.resultants.items()},
            'conditions': list(self.conditions),
            'verdict': self.verdict,
            'bonds': list(self.bonds),
            'diagnostics': dict(self.diagnostics, **self.term_counts),
        }


# --- equations ---

def _single(design, token):
    match = _TOKEN.fullmatch(token)
    if not match:
        msg = f"unknown equation {token!r}, use psi, n, l<i> or d<i><j>"
        raise ValueError(msg)
    if token == 'psi':
        return psi()
    if token == 'n':
        return norm()
    if match.group(1):
        return leg_form(design, int(match.group(1))).as_poly()
    i, j = int(match.group(2)), int(match.group(3))
    if i == j:
        raise ValueError(f"distinct legs required in {token!r}")
    return (leg_form(design, i) - leg_form(design, j)).as_poly()


def equation(design, name):
    """polynomial of a named equation

    :param design: :class:`PodDesign`
    :param name: `psi`, `n`, `l<i>` ($\\Lambda_i$), `d<i><j>`
        ($\\Delta_{i,j}$) or a sum/difference of those, e.g. `d41+d51`
    :return: :class:`MultiPoly`

    Legs without squared radius carry the symbol `R<i>sq`.
    """
    tokens = _split(r'\s*([+-])\s*', name.strip().lower())
    result = _single(design, tokens[0])
    for sign, token in zip(tokens[1::2], tokens[2::2]):
        p = _single(design, token)
        result = result + p if sign == '+' else result - p
    return result


# --- helpers ---

def _numerator(p, bindings):
    if not bindings:
        return p
    return substitute(p, bindings)[0]


def _prepared(bindings, base):
    """bindings with **base** (orientation and parameters) substituted"""
    result = {}
    for v, value in (bindings or {}).items():
        if isinstance(value, tuple):
            num, den = value
            n1, d1 = substitute(poly(num), base)
            n2, d2 = substitute(poly(den), base)
            result[v] = n1 * d2, d1 * n2
        else:
            result[v] = substitute(poly(value), base)
    return result


def _nonconstant_factors(p):
    if p.is_constant:
        return []
    _, factors = factor_list(p)
    return [(f, k) for f, k in factors if not f.is_constant]


def cancel(num, factors):
    """divide each (factor, multiplicity) out of **num** at most that often

    :return: tuple (cofactor, remaining factors)
    """
    rest = []
    for f, k in factors:
        j = 0
        while j < k:
            q = try_exact_divide(num, f)
            if q is None:
                break
            num, j = q, j + 1
        if k - j:
            rest.append((f, k - j))
    return num, rest


def _primitive(p):
    return p if p.is_zero else p.primitive()[1]


def _linear_system(equations, solve_for):
    matrix, rhs = [], []
    for name, p in equations:
        row = [MultiPoly(0)] * len(solve_for)
        const = MultiPoly(0)
        for key, c in collect_coefficients(p, solve_for).items():
            if sum(key) > 1:
                msg = f"equation {name} is not linear in {solve_for}"
                raise ValueError(msg)
            if sum(key) == 0:
                const = c
            else:
                row[key.index(1)] = c
        matrix.append(row)
        rhs.append(-const)
    return matrix, rhs


def _choose_unknowns(equations):
    """f-subset with non-vanishing pivot of smallest size"""
    best = None
    for subset in combinations(F_VARS, len(equations)):
        try:
            matrix, _ = _linear_system(equations, subset)
        except ValueError:
            continue
        det = determinant(matrix)
        if is_zero(det):
            continue
        size = len(det) if isinstance(det, MultiPoly) else 1
        if best is None or size < best[0]:
            best = size, subset
    if best is None:
        names = ', '.join(n for n, _ in equations)
        msg = f"no subset of f0..f3 can be solved from {names}"
        raise ValueError(msg)
    return best[1]


# --- elimination ---

def eliminate_f(design, equations, solve_for=None, targets=None,
                orientation=None, parameters=None, bindings=None,
                name=None):
    """solve equations linear in Study parameters f and substitute

    :param design: :class:`PodDesign` (anchors may be symbolic)
    :param equations: names of the equations to solve
        (see :func:`equation`), each linear in **solve_for**
    :param solve_for: f-variables to solve for; if None the subset with
        the smallest non-vanishing pivot is chosen
    :param targets: names of the equations to substitute into; default
        all `d<i>1` not used in **equations**
    :param orientation: mapping of Euler parameters to fixed values,
        polynomials or (numerator, denominator) pairs, e.g. `{'e3': 0}`
    :param parameters: mapping of design symbols to values
    :param bindings: mapping of f-variables to known rational functions
        (see :func:`pin_bindings`)
    :param name: trace id
    :return: :class:`EliminationTrace`

    The pivot determinant must not vanish identically; its factors are
    recorded as nonzero assumptions, the explicit form of the genericity
    conditions. A target numerator $G$ is the numerator of the
    substituted target in lowest terms, i.e. with each pivot factor
    cancelled as often as it divides the substitution denominator, made
    primitive.
    """
    start = perf_counter()
    equations = tuple(equations)
    base = dict(orientation or {})
    base.update(parameters or {})
    polys = [(eq, _numerator(equation(design, eq), base))
             for eq in equations]
    if solve_for is None:
        solve_for = _choose_unknowns(polys) if polys else ()
    solve_for = tuple(solve_for)
    if len(solve_for) != len(equations):
        msg = f"{len(equations)} equations for {len(solve_for)} unknowns"
        raise ValueError(msg)
    unknown = [v for v in solve_for if v not in F_VARS]
    if unknown:
        raise ValueError(f"only f0..f3 can be solved for, got {unknown}")

    trace = EliminationTrace(name or design.name or 'trace',
                             equations, solve_for)
    trace.orientation = dict(orientation or {})
    trace.parameters = dict(parameters or {})
    fixed = _prepared(bindings, base)
    cancel_factors = []
    for v, (_, den) in fixed.items():
        cancel_factors.extend(_nonconstant_factors(den))

    if equations:
        matrix, rhs = _linear_system(polys, solve_for)
        nums, det = cramer(matrix, rhs)
        det = poly(det)
        if det.is_zero:
            names = ', '.join(equations)
            msg = f"pivot of {names} in {', '.join(solve_for)} vanishes " \
                  f"identically, the genericity assumption fails"
            raise ValueError(msg)
        trace.pivot = det
        constant, factors = factor_list(det)
        factors = [(f, k) for f, k in factors if not f.is_constant]
        for f, _ in factors:
            trace.assume(f, 'pivot')
        cancel_factors.extend(factors)
        for v, num in zip(solve_for, nums):
            num, rest = cancel(poly(num), factors)
            den = MultiPoly(constant)
            for f, k in rest:
                den = den * f ** k
            c, num = num.primitive() if not num.is_zero else (1, num)
            trace.solved[v] = num, den * (1 / Fraction(c))
            _logger.debug(f"{trace.id}: solved {v} with "
                          f"{len(num)}/{len(den)} terms")

    if targets is None:
        used = set(equations)
        targets = [f"d{i}1" for i in range(2, design.n + 1)
                   if f"d{i}1" not in used]
    substitution = dict(fixed)
    substitution.update(trace.solved)
    for target in targets:
        p = _numerator(equation(design, target), base)
        num, den = substitute(p, substitution)
        num = _reduced(num, den, cancel_factors)
        g = _primitive(num)
        trace.numerators[target] = g
        _logger.debug(f"{trace.id}: numerator of {target} "
                      f"with {len(g)} terms")
    trace.diagnostics['elimination seconds'] = \
        round(perf_counter() - start, 3)
    return trace


def _reduced(num, den, factors):
    """**num** divided by its common factors with **den** among **factors**"""
    seen = []
    for f, _ in factors:
        if f in seen:
            continue
        seen.append(f)
        den, k = factor_out(den, f)
        if k:
            num, _ = cancel(num, [(f, k)])
    return num


def pin_bindings(m, M):
    """f-bindings of all displacements carrying platform point **m** to **M**

    :return: mapping f-variable -> (numerator, N)

    With $t = M - R(e)\\,m / N$ the Study parameters are
    $f = \\tfrac12 A(e)\\,t$; the numerators are polynomials in $e$.
    """
    rot = homogeneous_rotation(E)
    n = norm()
    nt = [n * poly(M[k]) - sum((r * poly(x) for r, x in zip(rot[k], m)),
                               MultiPoly(0))
          for k in range(3)]
    f = translation_to_f(E, nt)
    return {v: (fv, n) for v, fv in zip(F_VARS, f)}


# --- bonds on the exceptional cone ---

def parameter_content(p, free):
    """(content, primitive part) of **p** w.r.t. the e-variables **free**"""
    coeffs = list(collect_coefficients(p, free).values())
    content = coeffs[0]
    for c in coeffs[1:]:
        if content.is_constant:
            break
        content = gcd(content, c)
    if content.is_constant or content.is_zero:
        return MultiPoly(1), p
    return content, p / content


def _e_free(p, free):
    return not any(v in free for v in p.variables)


def _points(g, free):
    """projective points of a binary form over Q(i) as text, if possible"""
    x, y = free
    points = []
    for f, _ in factor_list(g)[1]:
        if f.is_constant:
            continue
        dx, dy = f.degree(x), f.degree(y)
        if f.degree() == 1:
            a, b = f.coefficient(x, 1), f.coefficient(y, 1)
            points.append({x: str(-b), y: str(a)})
        elif f.degree() == 2 and dx <= 2 and dy <= 2:
            a = f.coefficient(x, 2)
            b = f.coefficient(x, 1).coefficient(y, 1)
            c = f.coefficient(y, 2)
            if not (a.is_constant and b.is_constant and c.is_constant):
                points.append({'factor': str(f)})
                continue
            a, b, c = a.constant(), b.constant(), c.constant()
            disc = b * b - 4 * a * c
            re = text(-b / (2 * a))
            square = abs(disc) / (4 * a * a)
            root = isqrt_fraction(square)
            root = f"sqrt({text(square)})" if root is None else text(root)
            unit = 'I*' if disc < 0 else ''
            for sign in '+-':
                points.append({x: f"{re} {sign} {unit}{root}", y: '1'})
        else:
            points.append({'factor': str(f)})
    return points


def _merge(verdicts):
    return max(verdicts, key=_RANK.get) if verdicts else 'bonds-empty'


class _Cone:
    """recursive intersection of numerators with the exceptional cone"""

    def __init__(self, trace, var):
        self.trace = trace
        self.var = var
        self.points = []
        self.conditions = []

    def bind(self, polys, cone, free, v, value, label):
        polys = [_numerator(p, {v: value}) for p in polys]
        cone = _numerator(cone, {v: value})
        return self.run(polys, cone, tuple(w for w in free if w != v),
                        label)

    def run(self, polys, cone, free, label=''):
        clean = []
        for p in polys:
            if p.is_zero:
                continue
            for a in self.trace.assumptions:
                p, _ = factor_out(p, a)
            if _e_free(p, free):
                self.conditions.append(f"{label}{p} = 0")
                return 'bonds-empty'
            content, p = parameter_content(p, free)
            if not content.is_constant:
                self.trace.assume(content, 'parameter content')
            clean.append(p)
        k = len(free)
        if cone.is_zero:
            dim = k - 1
        elif _e_free(cone, free):
            dim = -1
        else:
            dim = k - 2
        if not clean:
            _logger.debug(f"{self.trace.id}: {label or 'all'} numerators "
                          f"vanish, cone dimension {dim}")
            if dim >= 1:
                return 'bonding-curve'
            if dim == 0:
                self.points.extend(_points(cone, free) if k == 2
                                   else [{'cone': str(cone)}])
                return 'finite-bonds'
            return 'bonds-empty'
        if dim < 0:
            return 'bonds-empty'
        common = clean[0]
        for p in clean[1:]:
            common = gcd(common, p)
        if k >= 4 and not _e_free(common, free):
            return 'bonding-curve'
        if all(try_exact_divide(p, cone) is not None for p in clean):
            return 'bonding-curve' if dim >= 1 else 'finite-bonds'
        if k <= 1:
            return 'bonds-empty'
        if k == 2:
            g = gcd(common, cone)
            if _e_free(g, free):
                return 'bonds-empty'
            self.points.extend(_points(g, free))
            return 'finite-bonds'
        return self.project(clean, cone, free, label)

    def project(self, polys, cone, free, label):
        var = self.var if self.var in free and cone.degree(self.var) > 0 \
            else next(v for v in free if cone.degree(v) > 0)
        rest = tuple(v for v in free if v != var)
        hs = []
        for p in polys:
            h = resultant(p, cone, var) if p.degree(var) > 0 else p
            if not h.is_zero:
                hs.append(h)
        if not hs:
            return 'inconclusive'
        common = hs[0]
        for h in hs[1:]:
            common = gcd(common, h)
        common, monomial = strip_monomial(common, rest)
        verdicts = []
        for v in monomial:
            if MultiPoly.variable(v) in self.trace.assumptions:
                continue
            verdicts.append(self.bind(polys, cone, free, v, 0,
                                      f"{label}{v}=0: "))
        if _e_free(common, rest):
            if len(rest) >= 3:
                # coprime curves in a plane meet in finitely many points
                self.points.append({'projection': 'unenumerated'})
                verdicts.append('finite-bonds')
            return _merge(verdicts)
        for f, _ in factor_list(common)[1]:
            if _e_free(f, rest):
                continue
            solved = _linear_variable(f, rest)
            if solved is None:
                self.conditions.append(f"{label}{f} = 0 not resolved")
                verdicts.append('inconclusive' if len(rest) >= 3
                                else 'finite-bonds')
                if len(rest) < 3:
                    self.points.append({'factor': str(f)})
                continue
            v, value = solved
            self.trace.assume(value[1], 'branch coefficient')
            verdicts.append(self.bind(polys, cone, free, v, value,
                                      f"{label}{f}=0: "))
        return _merge(verdicts)


def _linear_variable(f, free):
    """(var, (num, den)) solving the linear factor f for a variable
    whose coefficient is free of e-variables"""
    for v in reversed(free):
        if f.degree(v) != 1:
            continue
        c = f.coefficient(v, 1)
        if not _e_free(c, free):
            continue
        rest = f - c * MultiPoly.variable(v)
        return v, (-rest, c)
    return None


def bonds_on_norm_cone(trace, var='e0'):
    """classify the common zeros of the numerators on $N = 0$

    :param trace: :class:`EliminationTrace` whose numerators are free of
        f-variables
    :param var: Euler parameter eliminated first by resultants
    :return: verdict, one of `bonds-empty`, `finite-bonds`,
        `bonding-curve` or `inconclusive`; the candidate points (over
        $\\mathbb{Q}(i)$, as text) are stored in `trace.bonds`

    The cone is $N$ with the trace orientation substituted. Numerators
    free of the Euler parameters are obstructions (their vanishing is a
    parameter condition), a common factor of all numerators in
    $\\mathbb{P}^3$ or the cone dividing all of them gives a curve,
    otherwise the numerators are projected by resultants against the
    cone and the branches of the common factors are followed.

    Factors assumed nonzero by the trace (the pivot factors) are divided
    out first, so only bonds off the pivot locus are reported.
    """
    polys = list(trace.numerators.values())
    for p in polys:
        bad = [v for v in p.variables if v in F_VARS]
        if bad:
            msg = f"numerators of {trace.id} still depend on {bad}"
            raise ValueError(msg)
    base = dict(trace.orientation)
    base.update(trace.parameters)
    cone = _numerator(norm(), base)
    free = tuple(v for v in E_VARS if v not in base)
    start = perf_counter()
    cone_run = _Cone(trace, var)
    verdict = cone_run.run(polys, cone, free)
    trace.verdict = verdict
    trace.bonds = cone_run.points if verdict == 'finite-bonds' else []
    trace.conditions.extend(cone_run.conditions)
    trace.diagnostics['cone seconds'] = round(perf_counter() - start, 3)
    _logger.debug(f"{trace.id}: {verdict}")
    return verdict
