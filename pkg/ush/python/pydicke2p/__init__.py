import os

__docformat__ = "restructuredtext"
__version__ = "0.1.0"
pydicke2p_directory = os.path.dirname(__file__)
from .core import ModelParams, CouplingOrder, RegimeLabel  # noqa
