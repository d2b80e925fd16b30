# __init__ file for hstnbeam/optimization subfolder
# the convex substituted power constraint and the interior point solver for it

# classes and methods in import * are defined in __all__ at the top of each file

from .power_constraint import *
from .interior_point import *
from .derivative_test import *
