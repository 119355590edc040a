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


from itertools import permutations

from .constant import rational, text, to_float  # noqa F401


def relabelings(n, swap=True):
    """all leg permutations, optionally combined with platform/base swap

    yields tuples (permutation, swapped)
    """
    for perm in permutations(range(n)):
        yield perm, False
        if swap:
            yield perm, True
