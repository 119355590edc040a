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


from .elimination import EliminationTrace, eliminate_f, bonds_on_norm_cone, \
    equation, pin_bindings, VERDICTS  # noqa F401
from .beta import BetaClass, beta_classify  # noqa F401
from .registry import Assertion, Reproduction, REGISTRY, \
    reproduce  # noqa F401
