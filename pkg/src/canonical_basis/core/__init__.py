"""Exact arithmetic, root data, configuration and errors."""

from canonical_basis.core.errors import CanonicalBasisError
from canonical_basis.core.laurent import LaurentPoly, q_binomial, q_factorial, q_int
from canonical_basis.core.rootdata import CartanDatum

__all__ = [
    "CanonicalBasisError",
    "LaurentPoly",
    "q_int",
    "q_factorial",
    "q_binomial",
    "CartanDatum",
]
