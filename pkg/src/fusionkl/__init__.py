"""Exact fusion rules, tilting modules and braiding checks for affine sl2 at admissible levels."""

from .errors import FusionError
from .level import BraidingVariant, Level, classify_level, make_level

__all__ = ["BraidingVariant", "FusionError", "Level", "classify_level", "make_level"]
__version__ = "0.1.0"
