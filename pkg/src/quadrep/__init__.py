"""Rational points on elliptic quartics and cubics whose designated coordinate
is a value of a binary quadratic form."""

from .exact_arith import DomainError, UniPoly, q_from_str, q_to_str
from .elliptic import WCurve, WPoint, find_isomorphism, torsion_subgroup, w_add, w_mul

__version__ = "0.1.0"

__all__ = ["DomainError", "UniPoly", "WCurve", "WPoint", "find_isomorphism", "q_from_str", "q_to_str",
           "torsion_subgroup", "w_add", "w_mul", "__version__"]
