"""Chekanov DGAs of Legendrian knots over GF(2).

Thin wrapper around the C++ core; see the project README for the library
and command-line documentation.
"""

from legdga._core import *  # noqa: F401,F403
from legdga._core import __version__  # noqa: F401
