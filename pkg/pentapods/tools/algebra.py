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

from .constant import is_zero


def _zero_like(x):
    return x * 0


def determinant(matrix):
    r"""fraction-free (Bareiss) determinant

    :param matrix: square list of rows; entries must support `+ - *`
        and exact division `/` (Fraction, int or MultiPoly)
    :return: determinant of **matrix**

    In step $k$ every entry below and right of the pivot becomes

    .. math::

        m_{ij} \leftarrow \frac{m_{ij}m_{kk} - m_{ik}m_{kj}}{p}

    where $p$ is the previous pivot, and the division is exact.
    Zero pivots are avoided by row swaps.

    >>> determinant([[2, 1], [1, 3]])
    Fraction(5, 1)

    """
    m = [[e if not isinstance(e, int) else Fraction(e) for e in row]
         for row in matrix]
    n = len(m)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in m):
        raise ValueError(f"square matrix required, got {n} rows "
                         f"of lengths {[len(row) for row in m]}")
    sign, prev = 1, None
    for k in range(n - 1):
        if is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return _zero_like(m[0][0])
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = v if prev is None else v / prev
            m[i][k] = _zero_like(pivot)
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def rank(matrix):
    """rank of a matrix with Fraction (or int) entries"""
    return len(row_echelon(matrix)[1])


def row_echelon(matrix):
    """reduced row echelon form over the rationals

    :param matrix: list of rows
    :return: tuple (reduced rows, pivot columns)
    """
    m = [[Fraction(e) for e in row] for row in matrix]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots, r = [], 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [e * inv for e in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def nullspace(matrix):
    """basis of the right null space over the rationals"""
    m, pivots = row_echelon(matrix)
    cols = len(matrix[0]) if matrix else 0
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, p in zip(m, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(matrix, rhs):
    """unique solution of a regular rational linear system

    :param matrix: square list of rows
    :param rhs: right hand side vector
    :return: solution vector or None if the system is singular
        or inconsistent
    """
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    m, pivots = row_echelon(aug)
    if pivots != list(range(n)):
        return None
    return [m[i][n] for i in range(n)]


def cramer(matrix, rhs):
    """Cramer's rule over a commutative ring

    :param matrix: square list of rows (ring elements)
    :param rhs: right hand side vector
    :return: tuple (numerators, common denominator) with
        `x_k = numerators[k] / denominator`
    """
    den = determinant(matrix)
    nums = []
    for k in range(len(matrix)):
        swapped = [row[:k] + [b] + row[k + 1:] for row, b in zip(matrix, rhs)]
        nums.append(determinant(swapped))
    return nums, den


def mat_mul(a, b):
    """product of two matrices given as lists of rows"""
    return [[sum((x * y for x, y in zip(row, col)), _zero_like(row[0]))
             for col in zip(*b)] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def dot(u, v):
    return sum((x * y for x, y in zip(u, v)), _zero_like(u[0]))


def sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def scale(c, u):
    return tuple(c * x for x in u)
