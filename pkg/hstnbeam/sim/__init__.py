# __init__ file for hstnbeam/sim subfolder
# Monte Carlo experiments comparing the beamforming schemes over parameter sweeps

# classes and methods in import * are defined in __all__ at the top of each file

from ..model.link import evaluate_rate, estimate_interference
from .experiment import *
from .monte_carlo import *
