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


from warnings import warn

try:
    from numpy import array as Matrix
    from numpy.linalg import svd
except ImportError:
    Matrix = svd = None
    warn("numeric motion verification requires 'numpy'")


TOL = 1e-12
MAX_ITER = 60
RANK_TOL = 1e-8


def bisection_method(f, a, b, tol=TOL, max_iter=MAX_ITER):
    """root of a continuous function by interval halving

    :param f: callable with a sign change on $[a, b]$
    :param a: left end of the bracket
    :param b: right end of the bracket
    :param tol: half width of the final bracket
    :param max_iter: maximal number of halvings
    :return: float $c$ with $f(c) = 0$ or a bracket of half width `tol`
        around $c$

    >>> round(bisection_method(lambda x: x * x - 2., 0., 2.), 6)
    1.414214

    """
    fa, fb = f(a), f(b)
    if fa * fb > 0:
        msg = f"no sign change of function between {a} and {b}"
        raise ValueError(msg)
    if fa == 0:
        return a
    if fb == 0:
        return b

    for _ in range(max_iter):
        c = (a + b) / 2
        fc = f(c)
        if fc == 0 or abs(b - a) / 2 < tol:
            return c
        if fc * fa < 0:
            b = c
        else:
            a, fa = c, fc

    msg = f"bisection did not converge in {max_iter} steps"
    raise RuntimeError(msg)


def singular_values(matrix):
    """singular values of a float matrix, descending"""
    return svd(Matrix(matrix, dtype=float), compute_uv=False)


def numeric_rank(matrix, rel_tol=RANK_TOL):
    """rank of a float matrix

    singular values below `rel_tol * max singular value` count as zero
    """
    s = singular_values(matrix)
    if not len(s) or s[0] == 0:
        return 0
    return int(sum(v > rel_tol * s[0] for v in s))
