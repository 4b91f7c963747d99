"""Pedal, polar and negative-pedal porism constructions."""

from porism._core import *  # noqa: F401,F403
from porism._core import __doc__  # noqa: F401

__version__ = "0.1.0"
