"""sliceopt: exact-arithmetic minimization of indefinite quadratic forms
and slice-decomposable objectives over the integer points of bounded
polytopes, with verifiable sign-dependent approximation guarantees."""

from .driver import SolveReport
from .exactnum import Surd
from .linalg import SymMatrix
from .polytope import Polytope

__all__ = ["SolveReport", "Surd", "SymMatrix", "Polytope"]
__version__ = "0.1.0"
