"""Graded invariants and freeness tests for reduced plane curves."""

from .analysis import analyze
from .families import generate
from .milnor import CurveInput, MilnorProfile, full_profile
from .parser import ParseDiagnostic, parse_expression
from .poly import TriPoly

__version__ = "0.1.0"

__all__ = ["CurveInput", "MilnorProfile", "ParseDiagnostic", "TriPoly", "analyze", "full_profile",
           "generate", "parse_expression"]
