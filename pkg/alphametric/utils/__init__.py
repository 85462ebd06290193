from .parallel import *
from .report import *
