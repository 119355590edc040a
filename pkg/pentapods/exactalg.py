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

"""exact sparse multivariate polynomials with rational coefficients

The arithmetic runs on :mod:`sympy.polys.rings` over $\\mathbb{Q}$ in
graded reverse lexicographic order. :class:`MultiPoly` keeps the
declared variable order

    e0, e1, e2, e3, f0, f1, f2, f3, then any other symbol alphabetically

and adds the verification oriented operations of the elimination
pipeline: exact division and square roots (both returning ``None``
when impossible), fraction free Sylvester resultants and rational
function substitution.
"""

from fractions import Fraction
from functools import cache
from heapq import heapify, heappop, heappush
from logging import getLogger
from math import gcd as gcd_int, isqrt, lcm
from re import compile as _compile, split as _split
from time import perf_counter

from sympy.polys.domains import QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyRing

from .tools.algebra import determinant
from .tools.constant import rational, text


_logger = getLogger(__name__)

E_VARS = 'e0', 'e1', 'e2', 'e3'
F_VARS = 'f0', 'f1', 'f2', 'f3'
STUDY_VARS = E_VARS + F_VARS

_NAME = _compile(r'[A-Za-z][A-Za-z0-9_]*')
_FACTOR = _compile(r'([A-Za-z][A-Za-z0-9_]*)(?:\^([0-9]+))?')


def variable_key(name):
    """sort key of the declared variable order"""
    if name in E_VARS:
        return 0, E_VARS.index(name)
    if name in F_VARS:
        return 1, F_VARS.index(name)
    return 2, name


@cache
def _ring(names):
    return PolyRing(names, QQ, grevlex)


def _qq(value):
    value = rational(value)
    return QQ(value.numerator, value.denominator)


def _fraction(c):
    return Fraction(int(c.numerator), int(c.denominator))


def _names(*names):
    return tuple(sorted(set().union(*names), key=variable_key))


class MultiPoly:
    """immutable sparse polynomial over the rationals

    >>> x, y = variables('x y')
    >>> p = (x + y) * (x - y)
    >>> print(p)
    1*x^2 - 1*y^2
    >>> MultiPoly.parse(str(p)) == p
    True

    """

    __slots__ = '_poly', '_hash'

    def __init__(self, value=0, names=()):
        if isinstance(value, MultiPoly):
            self._poly = value._poly
        elif isinstance(value, (int, Fraction, str)) \
                and not isinstance(value, bool):
            self._poly = _ring(tuple(names)).ground_new(_qq(value))
        elif hasattr(value, 'ring'):
            self._poly = value
        else:
            cls = value.__class__.__qualname__
            msg = f"int, Fraction or MultiPoly required but type {cls} given"
            raise TypeError(msg)
        self._hash = None

    # --- construction ---

    @classmethod
    def variable(cls, name):
        if not _NAME.fullmatch(name):
            raise ValueError(f"invalid variable name {name!r}")
        ring = _ring((name,))
        return cls(ring.gens[0])

    @classmethod
    def from_terms(cls, terms):
        """build from pairs (mapping name -> exponent, coefficient)"""
        terms = [(dict(m), rational(c)) for m, c in terms]
        names = _names(*(m.keys() for m, _ in terms))
        coeffs = {}
        for m, c in terms:
            expv = tuple(m.get(n, 0) for n in names)
            coeffs[expv] = coeffs.get(expv, 0) + c
        coeffs = {m: _qq(c) for m, c in coeffs.items() if c}
        return cls(_ring(names).from_dict(coeffs))

    @classmethod
    def parse(cls, source):
        """parse the canonical text form

        Accepts terms like `3/2*e0^2*f1` joined by ` + ` or ` - `;
        the coefficient may be omitted.
        """
        source = source.strip()
        if not source:
            raise ValueError("empty polynomial text")
        tokens = _split(r'(?<=[0-9A-Za-z_])\s*([+-])\s*', source)
        signs = ['+'] + tokens[1::2]
        terms = []
        for sign, term in zip(signs, tokens[::2]):
            term = term.strip()
            neg = sign == '-'
            if term.startswith('-'):
                neg, term = not neg, term[1:]
            coeff, monom = Fraction(1), {}
            for factor in term.split('*'):
                factor = factor.strip()
                if factor and (factor[0].isdigit()):
                    coeff *= rational(factor)
                    continue
                match = _FACTOR.fullmatch(factor)
                if not match:
                    raise ValueError(f"malformed term {term!r} in {source!r}")
                name, exp = match.group(1), int(match.group(2) or 1)
                monom[name] = monom.get(name, 0) + exp
            terms.append((monom, -coeff if neg else coeff))
        return cls.from_terms(terms)

    # --- internals ---

    @property
    def names(self):
        """variables of the underlying ring (may include unused ones)"""
        return tuple(s.name for s in self._poly.ring.symbols)

    def _lift(self, names):
        ring = _ring(names)
        return self._poly.set_ring(ring)

    def _unify(self, other):
        if self.names == other.names:
            return self._poly, other._poly
        names = _names(self.names, other.names)
        return self._lift(names), other._lift(names)

    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly(other)
        return None

    # --- inspection ---

    @property
    def variables(self):
        """variables occurring in the polynomial, in declared order"""
        used = set()
        for monom in self._poly.itermonoms():
            used.update(n for n, e in zip(self.names, monom) if e)
        return tuple(sorted(used, key=variable_key))

    @property
    def is_zero(self):
        return not self._poly

    @property
    def is_constant(self):
        return all(not any(m) for m in self._poly.itermonoms())

    def __len__(self):
        return len(self._poly)

    def __bool__(self):
        return bool(self._poly)

    def terms(self):
        """terms in canonical order as (mapping name -> exponent, Fraction)"""
        names = self.names
        return [({n: e for n, e in zip(names, m) if e}, _fraction(c))
                for m, c in self._poly.terms()]

    def constant(self):
        """the value of a constant polynomial"""
        if not self.is_constant:
            raise ValueError(f"polynomial {self} is not constant")
        return _fraction(self._poly.coeff(1)) if self._poly else Fraction(0)

    def degree(self, var=None):
        """degree in **var** or total degree; -1 for the zero polynomial"""
        if not self._poly:
            return -1
        if var is None:
            return max(sum(m) for m in self._poly.itermonoms())
        if var not in self.names:
            return 0
        i = self.names.index(var)
        return max(m[i] for m in self._poly.itermonoms())

    def total_degree(self, vars):
        """maximal degree in the group of variables **vars**"""
        if not self._poly:
            return -1
        idx = [i for i, n in enumerate(self.names) if n in vars]
        return max(sum(m[i] for i in idx) for m in self._poly.itermonoms())

    def is_homogeneous(self, vars):
        idx = [i for i, n in enumerate(self.names) if n in vars]
        degrees = {sum(m[i] for i in idx) for m in self._poly.itermonoms()}
        return len(degrees) <= 1

    def leading_coefficient(self):
        if not self._poly:
            return Fraction(0)
        return _fraction(self._poly.LC)

    def coefficient(self, var, k):
        """coefficient of var^k as polynomial in the remaining variables"""
        return collect_coefficients(self, (var,)).get((k,), MultiPoly(0))

    def coefficients(self, var):
        """coefficients of var^0 .. var^deg"""
        coeffs = collect_coefficients(self, (var,))
        deg = self.degree(var)
        return [coeffs.get((k,), MultiPoly(0)) for k in range(deg + 1)]

    def monomial_content(self):
        """largest monomial dividing the polynomial as mapping"""
        if not self._poly:
            return {}
        monoms = list(self._poly.itermonoms())
        low = [min(m[i] for m in monoms) for i in range(len(self.names))]
        return {n: e for n, e in zip(self.names, low) if e}

    def content(self):
        """positive rational c with self / c primitive and integral"""
        if not self._poly:
            return Fraction(0)
        coeffs = [_fraction(c) for c in self._poly.itercoeffs()]
        num = gcd_int(*(c.numerator for c in coeffs))
        den = lcm(*(c.denominator for c in coeffs))
        return Fraction(num, den)

    def primitive(self):
        """(c, p) with self == c * p, p integral, coprime, positive lead"""
        if not self._poly:
            return Fraction(0), self
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        return c, self * (1 / c)

    # --- arithmetic ---

    def __neg__(self):
        return MultiPoly(-self._poly)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p, q = self._unify(other)
        return MultiPoly(p + q)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p, q = self._unify(other)
        return MultiPoly(p - q)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly(self._poly.mul_ground(_qq(other))) \
                if other else MultiPoly(self._poly.ring.zero)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p, q = self._unify(other)
        return MultiPoly(p * q)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"non-negative integer exponent required, "
                             f"got {n!r}")
        return MultiPoly(self._poly ** n)

    def __truediv__(self, other):
        """exact division (raises ValueError if not divisible)"""
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_constant:
            return self / other.constant()
        q = try_exact_divide(self, other)
        if q is None:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p, q = self._unify(other)
        return p == q

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(
                (tuple(sorted(m.items())), c) for m, c in self.terms()))
        return self._hash

    # --- calculus and evaluation ---

    def diff(self, var):
        if var not in self.names:
            return MultiPoly(0)
        ring = self._poly.ring
        return MultiPoly(self._poly.diff(ring.gens[self.names.index(var)]))

    def subs(self, bindings):
        """polynomial substitution of variables by scalars or polynomials"""
        return substitute(self, bindings)[0]

    def evaluate(self, values):
        """value at a point given as mapping name -> number

        Exact for Fraction/int values, float arithmetic otherwise.
        Missing variables raise KeyError.
        """
        names = self.names
        total = 0
        for monom, c in self._poly.iterterms():
            term = _fraction(c)
            for n, e in zip(names, monom):
                if e:
                    term = term * values[n] ** e
            total = total + term
        return total

    # --- printing ---

    def __str__(self):
        if not self._poly:
            return '0'
        parts = []
        for i, (monom, c) in enumerate(self.terms()):
            factors = [n if e == 1 else f"{n}^{e}"
                       for n, e in sorted(monom.items(),
                                          key=lambda t: variable_key(t[0]))]
            if i == 0:
                head = text(c)
            else:
                parts.append('-' if c < 0 else '+')
                head = text(abs(c))
            parts.append('*'.join([head] + factors))
        return ' '.join(parts)

    def __repr__(self):
        return f"{self.__class__.__name__}({str(self)!r})"

    def __format__(self, spec):
        return format(str(self), spec)

    def as_expr(self):
        """sympy expression, used for Groebner bases"""
        return self._poly.as_expr()


def variables(names):
    """polynomial generators

    >>> e0, e1 = variables('e0 e1')
    """
    if isinstance(names, str):
        names = names.replace(',', ' ').split()
    return tuple(MultiPoly.variable(n) for n in names)


def poly(value):
    """coerce int, Fraction, rational string or MultiPoly text"""
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, str) and not _NAME.search(value):
        return MultiPoly(rational(value))
    if isinstance(value, str):
        return MultiPoly.parse(value)
    return MultiPoly(value)


def poly_arith(p, q, op):
    """exact ring operation `op` in {'add', 'sub', 'mul'}"""
    p, q = poly(p), poly(q)
    if op == 'add':
        return p + q
    if op == 'sub':
        return p - q
    if op == 'mul':
        return p * q
    raise ValueError(f"unknown operation {op!r}, use add, sub or mul")


# --- division and roots ---


def _heap_key(m):
    return -sum(m), m[::-1]


def try_exact_divide(p, d):
    """exact quotient or None

    :param p: dividend
    :param d: nonzero divisor
    :return: q with p == d * q or None if **d** does not divide **p**

    >>> x, y = variables('x y')
    >>> print(try_exact_divide(x**2 - y**2, x - y))
    1*x + 1*y
    >>> try_exact_divide(x**2 + 1, x - 1) is None
    True

    """
    p, d = poly(p), poly(d)
    if d.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero:
        return MultiPoly(0)
    pp, dd = p._unify(d)
    ring = pp.ring
    zero = ring.domain.zero
    lm = dd.leading_expv()
    lc = dd[lm]
    tail = [(m, c) for m, c in dd.items() if m != lm]
    rem = dict(pp)
    heap = [(_heap_key(m), m) for m in rem]
    heapify(heap)
    quo = {}
    while heap:
        _, m = heappop(heap)
        c = rem.pop(m, None)
        if c is None:
            continue
        qm = tuple(a - b for a, b in zip(m, lm))
        if min(qm, default=0) < 0:
            return None
        qc = c / lc
        quo[qm] = qc
        for tm, tc in tail:
            nm = tuple(a + b for a, b in zip(tm, qm))
            nc = rem.get(nm, zero) - qc * tc
            if nc:
                if nm not in rem:
                    heappush(heap, (_heap_key(nm), nm))
                rem[nm] = nc
            else:
                rem.pop(nm, None)
    return MultiPoly(ring.from_dict(quo))


def isqrt_fraction(value):
    """exact square root of a non-negative rational or None"""
    value = Fraction(value)
    if value < 0:
        return None
    n, d = isqrt(value.numerator), isqrt(value.denominator)
    if n * n != value.numerator or d * d != value.denominator:
        return None
    return Fraction(n, d)


def _rational_sqrt(c):
    root = isqrt_fraction(_fraction(c))
    return None if root is None else _qq(root)


def try_square_root(p):
    """exact square root with positive leading coefficient or None

    The root is built term by term from the leading term: if
    $K$ is the partial root and $r = p - K^2$ then the next term is
    $t = \\mathrm{LT}(r) / (2\\,\\mathrm{LT}(K))$. The result is verified by
    squaring.

    >>> x, y = variables('x y')
    >>> print(try_square_root((x + y)**2))
    1*x + 1*y
    >>> try_square_root(x**2 + y**2) is None
    True

    """
    p = poly(p)
    if p.is_zero:
        return MultiPoly(0)
    pp = p._poly
    ring = pp.ring
    zero = ring.domain.zero
    lm = pp.leading_expv()
    if any(e % 2 for e in lm):
        return None
    root_c = _rational_sqrt(pp[lm])
    if root_c is None:
        return None
    k_lm = tuple(e // 2 for e in lm)
    root = {k_lm: root_c}
    two_lc = 2 * root_c
    rem = {m: c for m, c in pp.items() if m != lm}
    heap = [(_heap_key(m), m) for m in rem]
    heapify(heap)
    limit = 2 * len(pp) + 2
    while heap:
        _, m = heappop(heap)
        c = rem.pop(m, None)
        if c is None:
            continue
        tm = tuple(a - b for a, b in zip(m, k_lm))
        if min(tm, default=0) < 0 or len(root) >= limit:
            return None
        tc = c / two_lc
        # r <- r - 2 t (K - LT K) - t^2, LT cancelled by popping m
        updates = [(tuple(a + b for a, b in zip(km, tm)), 2 * tc * kc)
                   for km, kc in root.items() if km != k_lm]
        updates.append((tuple(2 * a for a in tm), tc * tc))
        root[tm] = tc
        for nm, sc in updates:
            nc = rem.get(nm, zero) - sc
            if nc:
                if nm not in rem:
                    heappush(heap, (_heap_key(nm), nm))
                rem[nm] = nc
            else:
                rem.pop(nm, None)
    result = MultiPoly(ring.from_dict(root))
    if result * result != p:
        return None
    return result


def factor_out(p, factor):
    """divide **factor** out of **p** as often as possible

    :return: tuple (cofactor, multiplicity)
    """
    p, factor = poly(p), poly(factor)
    if factor.is_constant or p.is_zero:
        return p, 0
    k = 0
    while True:
        q = try_exact_divide(p, factor)
        if q is None:
            return p, k
        p, k = q, k + 1


def strip_monomial(p, vars=None):
    """remove the monomial content in **vars** (all variables if None)

    :return: tuple (cofactor, monomial as mapping name -> exponent)
    """
    p = poly(p)
    content = {n: e for n, e in p.monomial_content().items()
               if vars is None or n in vars}
    if not content:
        return p, {}
    monom = MultiPoly.from_terms([(content, 1)])
    return p / monom, content


def proportional(p, q):
    """rational c with p == c * q or None

    >>> x, y = variables('x y')
    >>> proportional(4 * x - 6 * y, 2 * x - 3 * y)
    Fraction(2, 1)

    """
    p, q = poly(p), poly(q)
    if p.is_zero and q.is_zero:
        return Fraction(1)
    if p.is_zero or q.is_zero or len(p) != len(q):
        return None
    pp, qq = p._unify(q)
    lm_p, lm_q = pp.leading_expv(), qq.leading_expv()
    if lm_p != lm_q:
        return None
    c = _fraction(pp[lm_p]) / _fraction(qq[lm_q])
    if p != q * c:
        return None
    return c


def proportional_fraction(p, q):
    """proportionality of rational functions given as (num, den) pairs"""
    (pn, pd), (qn, qd) = p, q
    return proportional(poly(pn) * poly(qd), poly(qn) * poly(pd))


def factor_list(p):
    """irreducible factorization over the rationals

    Used only for small polynomials (denominators of solved variables).

    :return: tuple (Fraction constant, list of (factor, multiplicity))
    """
    p = poly(p)
    if p.is_constant:
        return p.constant(), []
    c, factors = p._poly.factor_list()
    return _fraction(c), [(MultiPoly(f), k) for f, k in factors]


def gcd(p, q):
    """greatest common divisor with positive leading coefficient"""
    p, q = poly(p), poly(q)
    pp, qq = p._unify(q)
    g = MultiPoly(pp.gcd(qq))
    return g.primitive()[1] if not g.is_zero else g


# --- collection and substitution ---


def collect_coefficients(p, vars):
    """**p** as polynomial in **vars** with polynomial coefficients

    :param p: polynomial
    :param vars: sequence of variable names
    :return: mapping exponent tuple (over **vars**) -> MultiPoly

    >>> a, b, x = variables('a b x')
    >>> c = collect_coefficients(a * x**2 + b * x + a * b, ['x'])
    >>> print(c[(2,)], c[(1,)], c[(0,)])
    1*a 1*b 1*a*b

    """
    p = poly(p)
    vars = tuple(vars)
    names = p.names
    idx = [names.index(v) if v in names else None for v in vars]
    rest = tuple(n for n in names if n not in vars)
    rest_idx = [names.index(n) for n in rest]
    ring = _ring(rest)
    groups = {}
    for monom, c in p._poly.iterterms():
        key = tuple(monom[i] if i is not None else 0 for i in idx)
        groups.setdefault(key, {})[tuple(monom[i] for i in rest_idx)] = c
    if not groups:
        return {tuple(0 for _ in vars): MultiPoly(0)}
    return {k: MultiPoly(ring.from_dict(v)) for k, v in groups.items()}


def halve_exponents(p, var, new):
    """substitute var^2 by **new**, or None if an odd power of var occurs

    >>> e1, e3 = variables('e1 e3')
    >>> print(halve_exponents(e3**4 + e1 * e3**2, 'e3', 'e3bar'))
    1*e1*e3bar + 1*e3bar^2

    """
    p = poly(p)
    terms = []
    for monom, c in p.terms():
        k = monom.pop(var, 0)
        if k % 2:
            return None
        if k:
            monom[new] = monom.get(new, 0) + k // 2
        terms.append((monom, c))
    return MultiPoly.from_terms(terms) if terms else MultiPoly(0)


def _binding(value):
    if isinstance(value, tuple):
        num, den = value
        return poly(num), poly(den)
    return poly(value), MultiPoly(1)


def substitute(p, bindings):
    """rational function substitution

    :param p: polynomial
    :param bindings: mapping name -> value, where value is a scalar,
        a polynomial or a pair (numerator, denominator)
    :return: pair (numerator, denominator) of polynomials with
        `p(bindings) == numerator / denominator`

    The denominator is the product of den_i^deg_i over all bound
    variables, so the numerator is a polynomial.

    >>> x, a, b = variables('x a b')
    >>> n, d = substitute(x**2 + 1, {'x': (a, b)})
    >>> print(n, '|', d)
    1*a^2 + 1*b^2 | 1*b^2

    """
    p = poly(p)
    bound = [v for v in bindings if v in p.variables]
    if not bound:
        return p, MultiPoly(1)
    pairs = {v: _binding(bindings[v]) for v in bound}
    for v, (_, den) in pairs.items():
        if den.is_zero:
            raise ZeroDivisionError(f"identically zero denominator for {v}")
    degrees = {v: p.degree(v) for v in bound}
    cache_num = {v: [MultiPoly(1)] for v in bound}
    cache_den = {v: [MultiPoly(1)] for v in bound}

    def power(cache, base, k):
        while len(cache) <= k:
            cache.append(cache[-1] * base)
        return cache[k]

    numerator = MultiPoly(0)
    for key, coeff in collect_coefficients(p, bound).items():
        term = coeff
        for v, e in zip(bound, key):
            num, den = pairs[v]
            if e:
                term = term * power(cache_num[v], num, e)
            if degrees[v] - e:
                term = term * power(cache_den[v], den, degrees[v] - e)
        numerator = numerator + term
    denominator = MultiPoly(1)
    for v in bound:
        if degrees[v]:
            denominator = denominator * \
                power(cache_den[v], pairs[v][1], degrees[v])
    return numerator, denominator


def reduce_fraction(num, den):
    """cancel the factors of a (small) denominator from the numerator

    The denominator is factored; each irreducible factor is divided out
    of the numerator as long as both contain it. The numerator is made
    primitive with positive leading coefficient, its content moves to
    the denominator.

    :return: tuple (numerator, denominator)
    """
    num, den = poly(num), poly(den)
    if den.is_zero:
        raise ZeroDivisionError("identically zero denominator")
    if num.is_zero:
        return num, MultiPoly(1)
    if not den.is_constant:
        c, factors = factor_list(den)
        den = MultiPoly(c)
        for f, k in factors:
            num, j = _factor_out_upto(num, f, k)
            den = den * f ** (k - j)
    c, num = num.primitive()
    return num, den * (1 / c)


def _factor_out_upto(p, f, k):
    j = 0
    while j < k:
        q = try_exact_divide(p, f)
        if q is None:
            break
        p, j = q, j + 1
    return p, j


# --- resultants ---


def _reduce(p, q, var):
    """remainder of p modulo q in var, q with constant leading coefficient"""
    m = q.degree(var)
    lc = q.coefficient(var, m).constant()
    x = MultiPoly.variable(var)
    while p.degree(var) >= m and not p.is_zero:
        d = p.degree(var)
        p = p - p.coefficient(var, d) * (1 / lc) * x ** (d - m) * q
    return p


def sylvester_matrix(p, q, var):
    """Sylvester matrix with the coefficient rows of **p** first"""
    m, n = p.degree(var), q.degree(var)
    pc = list(reversed(p.coefficients(var)))
    qc = list(reversed(q.coefficients(var)))
    size = m + n
    zero = MultiPoly(0)
    rows = []
    for i in range(n):
        rows.append([zero] * i + pc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (size - n - 1 - i))
    return rows


def resultant(p, q, var, degrees=None):
    r"""Sylvester resultant eliminating **var**

    :param p: polynomial of positive degree in **var**
    :param q: polynomial of positive degree in **var**
    :param var: variable name
    :param degrees: optional nominal degrees (deg p, deg q); a differing
        actual degree means a vanishing leading coefficient and raises
    :return: determinant of the Sylvester matrix with the rows of **p**
        first

    When one argument has a constant leading coefficient the other is
    first reduced modulo it, using
    $\mathrm{res}(q, p) = c^{\deg p - \deg r}\,\mathrm{res}(q, r)$
    for $r = p \bmod q$ and
    $\mathrm{res}(p, q) = (-1)^{\deg p \deg q}\,\mathrm{res}(q, p)$.

    >>> x, a, b = variables('x a b')
    >>> print(resultant(x - a, x - b, 'x'))
    1*a - 1*b

    """
    p, q = poly(p), poly(q)
    m, n = p.degree(var), q.degree(var)
    if degrees is not None and (m, n) != tuple(degrees):
        raise ValueError(f"degree drop in {var}: nominal degrees {degrees} "
                         f"but actual ({m}, {n})")
    if m < 1 or n < 1:
        raise ValueError(f"positive degree in {var} required, "
                         f"got degrees ({m}, {n})")
    start = perf_counter()
    res = _resultant(p, q, var)
    _logger.debug(f"resultant in {var} of degrees ({m}, {n}) with "
                  f"{len(res)} terms in {perf_counter() - start:.3f}s")
    return res


def _constant_lead(p, var):
    return p.coefficient(var, p.degree(var)).is_constant


def _resultant(p, q, var):
    m, n = p.degree(var), q.degree(var)
    if _constant_lead(q, var) and n <= m:
        sign = -1 if (m * n) % 2 else 1
        return _resultant_reduced(q, p, var) * sign
    if _constant_lead(p, var) and m <= n:
        return _resultant_reduced(p, q, var)
    return determinant(sylvester_matrix(p, q, var))


def _resultant_reduced(q, p, var):
    """res(q, p) for q with constant leading coefficient"""
    n, m = q.degree(var), p.degree(var)
    lc = q.coefficient(var, n).constant()
    r = _reduce(p, q, var)
    if r.is_zero:
        return MultiPoly(0)
    k = r.degree(var)
    factor = lc ** (m - k)
    if k == 0:
        return r ** n * factor
    return determinant(sylvester_matrix(q, r, var)) * factor


# --- gaussian rationals ---


def gaussian_parts(p, unit='I'):
    """split a polynomial in the imaginary unit variable **unit**

    :return: tuple (real part, imaginary part) with `unit^2 = -1`
    """
    p = poly(p)
    re, im = MultiPoly(0), MultiPoly(0)
    for (k,), c in collect_coefficients(p, (unit,)).items():
        sign = -1 if k % 4 in (2, 3) else 1
        if k % 2:
            im = im + c * sign
        else:
            re = re + c * sign
    return re, im


def gaussian_divide(num, den, unit='I'):
    """quotient of two gaussian polynomials as (numerator, denominator)

    The denominator becomes real: num / den = num * conj(den) / |den|^2.
    """
    i = MultiPoly.variable(unit)
    nr, ni = gaussian_parts(num, unit)
    dr, di = gaussian_parts(den, unit)
    norm = dr * dr + di * di
    if norm.is_zero:
        raise ZeroDivisionError("identically zero gaussian denominator")
    re = nr * dr + ni * di
    im = ni * dr - nr * di
    return re + im * i, norm
