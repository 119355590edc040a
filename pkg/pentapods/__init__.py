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


__doc__ = 'Self-motions of pentapods and hexapods: ' \
          'exact bond elimination, classification and motion verification.'
__version__ = '0.1'
__dev_status__ = '3 - Alpha'
__date__ = 'Saturday, 17 October 2026'
__author__ = 'sonntagsgesicht'
__email__ = 'sonntagsgesicht@icloud.com'
__url__ = 'https://github.com/sonntagsgesicht/' + __name__
__license__ = 'Apache License 2.0'
__dependencies__ = 'numpy', 'scipy', 'sympy', \
    'vectorizeit', 'prettyclass', 'tabulate'
__dependency_links__ = ()
__data__ = ('designs/*.json', 'designs/README.rst')
__scripts__ = ('pentapods = pentapods.cli:main',)
__theme__ = 'sphinx_rtd_theme'

import logging
logging.getLogger(__name__).addHandler(logging.NullHandler())

# todo:
#  [ ] cross resultant check of the general collinear case runs for
#      hours, try a modular (prime field) variant


from .exactalg import MultiPoly, resultant, substitute, \
    try_exact_divide, try_square_root, collect_coefficients  # noqa E401 E402
from .study import StudyPoint, QuadraticForm8, rotation_translation, \
    sphere_condition, delta, constraint_jacobian  # noqa E401 E402
from .geometry import PodDesign, PlanarMap, \
    coincidence_collinearity_profile, fit_map, affine_isometric_directions, \
    conic_through_five, architecturally_singular, on_revolution_cylinder, \
    spherical_rpr_self_motion  # noqa E401 E402
from .bonds import EliminationTrace, BetaClass, eliminate_f, \
    bonds_on_norm_cone, beta_classify, reproduce, REGISTRY  # noqa E401 E402
from .classify import ClassificationReport, necessary_conditions_thm1a, \
    classify_pentapod, classify_hexapod, classify, \
    collinear_base_side_cases  # noqa E401 E402
from .motions import MotionSample, translational_self_motion, \
    spherical_self_motion, schoenflies_self_motion, \
    local_mobility  # noqa E401 E402
