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


import sys
sys.path.append('pentapods/')
sys.path.append('.')
sys.path.append('..')

# from .exactalg_tests import *
# from .study_tests import *
# from .geometry_tests import *
# from .classify_tests import *
# from .bonds_tests import *
# from .motions_tests import *
# from .cli_tests import *
# from .tools_tests import *
