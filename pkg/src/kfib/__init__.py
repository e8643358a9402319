"""Exact k-generalized Fibonacci polynomials F_{n,k}(x) for every integer n."""

from .errors import (ConvergenceFailure, KFibError, KTooSmall, MonomialIndex, NotDivisible,
                     StructureViolation, VanishingIndex)
from .factorization import Factorization, factorize
from .indexing import IndexProfile, profile, vanishing_set
from .polycore import IntPoly, parse, render
from .recurrence import fib_number, fib_poly

__all__ = [
    "ConvergenceFailure", "KFibError", "KTooSmall", "MonomialIndex", "NotDivisible",
    "StructureViolation", "VanishingIndex", "Factorization", "factorize", "IndexProfile",
    "profile", "vanishing_set", "IntPoly", "parse", "render", "fib_number", "fib_poly",
]
