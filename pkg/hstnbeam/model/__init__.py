# __init__ file for hstnbeam/model subfolder
# value types and physics of the satellite downlink: PA models, channels, problem data

# classes and methods in import * are defined in __all__ at the top of each file

from ._units import *
from .errors import *
from .pa import *
from .channel import *
from .problem import *
from .link import *
