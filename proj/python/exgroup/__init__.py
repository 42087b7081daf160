"""Schur rings, partial difference sets, Steiner triple systems and
exclusive-group certificates over finite groups."""

from ._exgroup import *  # noqa: F401,F403
from ._exgroup import __doc__  # noqa: F401

__version__ = "0.1.0"
