"""Finite double categories: tables, adjunctions, foldings, monads."""

from .core import Finite2Category, TableDoubleCategory, validate, view
from .errors import DblCatError

__all__ = ["DblCatError", "Finite2Category", "TableDoubleCategory", "validate", "view"]
__version__ = "0.1.0"
