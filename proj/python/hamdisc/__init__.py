"""Exact ball discrepancies of point sets in the binary Hamming space.

Codes are lists of coordinate strings like ``["000", "111"]``; exact results
come back as :class:`fractions.Fraction`.
"""

from hamdisc._core import *  # noqa: F401,F403
from hamdisc._core import __version__  # noqa: F401
