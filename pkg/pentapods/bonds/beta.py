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


from logging import getLogger
from math import sqrt

from ..geometry import congruent
from ..tools.numerics import numeric_rank

_logger = getLogger(__name__)

BETA_VALUES = -1, 0, 1, None
MIN_SAMPLES = 10
PCA_TOL = 1e-6


class BetaClass:
    """dimension of the projected bond set of a 2-dimensional self-motion

    :param value: -1 (pure translation), 0, 1 or None (undecided)
    :param reason: short text how the value was obtained
    """

    def __init__(self, value, reason=''):
        if value not in BETA_VALUES:
            msg = f"beta must be one of {BETA_VALUES}, got {value!r}"
            raise ValueError(msg)
        self.value = value
        self.reason = reason

    def __eq__(self, other):
        if isinstance(other, BetaClass):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return 'β=none' if self.value is None else f"β={self.value}"

    def __repr__(self):
        return f"{self.__class__.__name__}({self.value!r}, {self.reason!r})"


def _euler(sample):
    pose = getattr(sample, 'pose', sample)
    e = getattr(pose, 'e', None)
    if e is None:
        e = tuple(pose)[:4]
    e = [float(x) for x in e]
    n = sqrt(sum(x * x for x in e))
    if not n:
        raise ValueError("sample on the exceptional cone N = 0")
    return [x / n for x in e]


def beta_classify(design, samples=None, tol=PCA_TOL):
    """β-class of the 2-dimensional self-motion of a design

    :param design: :class:`PodDesign`
    :param samples: optional poses of the self-motion
        (:class:`MotionSample` or :class:`StudyPoint`), at least ten
    :param tol: relative singular value tolerance of the rank estimate
    :return: :class:`BetaClass`

    Congruent platform and base give -1. Otherwise the rank of the
    normalized Euler parameter vectors of the samples is the dimension
    of the orientation set plus one: rank 2 (rotations about one axis
    direction) gives 0, rank 3 or more gives 1. Without samples the
    design is classified and the β of the matched case is returned.
    """
    if congruent(design.platform, design.base):
        return BetaClass(-1, 'congruent platform and base')
    if samples is None:
        from ..classify import classify
        return classify(design).beta
    samples = list(samples)
    if len(samples) < MIN_SAMPLES:
        msg = f"at least {MIN_SAMPLES} samples required, got {len(samples)}"
        raise ValueError(msg)
    r = numeric_rank([_euler(s) for s in samples], rel_tol=tol)
    _logger.debug(f"orientation rank {r} of {len(samples)} samples")
    if r <= 1:
        return BetaClass(None, 'constant orientation without congruence')
    if r == 2:
        return BetaClass(0, 'orientations about a fixed axis direction')
    return BetaClass(1, f"orientation set of rank {r}")
