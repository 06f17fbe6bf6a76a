"""Exact census of abelian covers of GL_n(q), with brute-force oracles.

Integers come back as int and rationals as fractions.Fraction.
"""

from ._core import *  # noqa: F401,F403
from ._core import Error, DomainError, BudgetExceeded, UnsupportedRegime  # noqa: F401

__version__ = "0.1.0"
