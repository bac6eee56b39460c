"""
canonical-basis - Canonical bases of irreducible U_q(g)-modules.

Computes the canonical basis of V(lambda) inside a tensor product of
fundamental modules, using Littelmann-path adapted monomials and a
triangular bar-correction.
"""

__version__ = "0.1.0"
__author__ = "Canonical Basis Contributors"
__license__ = "MIT"

from canonical_basis.core.laurent import LaurentPoly
from canonical_basis.core.rootdata import CartanDatum

__all__ = [
    "LaurentPoly",
    "CartanDatum",
]
