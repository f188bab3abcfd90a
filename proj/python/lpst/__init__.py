"""Longest plane spanning trees of planar point sets.

Points are lists of (x, y) tuples; trees are lists of (i, j) index pairs.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
