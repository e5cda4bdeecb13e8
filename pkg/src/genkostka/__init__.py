"""Generalized Kostka polynomials and supernomials indexed by sequences of rectangles."""

from .errors import DefectError, UserInputError
from .qpoly import QPoly, qbinom

__version__ = "0.1.0"

__all__ = ["DefectError", "QPoly", "UserInputError", "qbinom", "__version__"]
