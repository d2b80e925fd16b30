# __init__ file for hstnbeam/interface subfolder
# config documents, result writers and the command line front end

# classes and methods in import * are defined in __all__ at the top of each file

from .config_file import *
from .writers import *
from .cli import *
