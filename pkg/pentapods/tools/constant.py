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
from re import compile as _compile

from vectorizeit import vectorize


RATIONAL = _compile(r'-?[0-9]+(/[1-9][0-9]*)?')
ZERO, ONE = Fraction(0), Fraction(1)


def rational(value):
    """exact rational constant

    :param value: int, Fraction or string matching `-?[0-9]+(/[1-9][0-9]*)?`
    :return: Fraction in lowest terms

    >>> rational('3/6')
    Fraction(1, 2)
    >>> rational(-2)
    Fraction(-2, 1)

    """
    if isinstance(value, bool):
        msg = f"rational required but bool {value!r} given"
        raise TypeError(msg)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not RATIONAL.fullmatch(text):
            msg = f"malformed rational {value!r}"
            raise ValueError(msg)
        return Fraction(text)
    cls = value.__class__.__qualname__
    msg = f"int, Fraction or str required but type {cls} given"
    raise TypeError(msg)


def text(value):
    """canonical `p/q` text of a rational (`p` for integers)"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@vectorize(keys='x')
def to_float(x):
    """float value of an exact scalar (Fraction, int or constant MultiPoly)"""
    if hasattr(x, 'constant'):
        x = x.constant()
    return float(x)


def is_zero(x):
    """zero test working for scalars and polynomials alike"""
    if hasattr(x, 'is_zero'):
        return x.is_zero
    return x == 0
