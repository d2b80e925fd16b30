# __init__ file for hstnbeam/driver subfolder
# beamforming drivers: the nonlinearity-aware design and the baseline schemes

# classes and methods in import * are defined in __all__ at the top of each file

from ._beamforming_driver import *
from .beamformer import *
from .baselines import *
from .schemes import *
