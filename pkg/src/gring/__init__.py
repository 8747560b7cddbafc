"""Commutative group-ring calculus with exact Groebner certification.

The package turns questions about normal generation of finitely presented
groups into ideal-membership questions in commutative rings over the
rationals, decided by exact Groebner-basis computations and cross-checked
by a quaternion evaluation oracle.
"""

from .kernel import backend as kernel_backend
from .poly import Poly, Rational, chebyshev_like
from .ring import build_KF
from .words import Presentation, Word, parse_presentation, parse_word

__all__ = [
    "Poly",
    "Presentation",
    "Rational",
    "Word",
    "build_KF",
    "chebyshev_like",
    "kernel_backend",
    "parse_presentation",
    "parse_word",
]

__version__ = "0.1.0"
