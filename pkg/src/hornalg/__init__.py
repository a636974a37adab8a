"""Propositional Horn programs as algebraic values."""

from .core import Alphabet, Interpretation, PermutationMap, Program, Rule
from .errors import HornAlgebraError

__version__ = "0.1.0"

__all__ = ["Alphabet", "Interpretation", "PermutationMap", "Program", "Rule", "HornAlgebraError"]
