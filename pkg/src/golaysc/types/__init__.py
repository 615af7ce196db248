from .data_types import *
