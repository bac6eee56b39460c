"""
Exception hierarchy for canonical basis computations.
"""


class CanonicalBasisError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class NonDivisible(CanonicalBasisError):
    """Exact division of Laurent polynomials failed."""


class NotInOrbit(CanonicalBasisError):
    """A weight is not in the Weyl orbit of the given dominant weight."""


class MalformedPath(CanonicalBasisError):
    """A path does not belong to the path crystal it was used with."""


class ParseError(CanonicalBasisError):
    """Malformed textual input (Laurent literal, weight, tableau, module file)."""


class RelationViolation(CanonicalBasisError):
    """A module fails one of the defining relations of U_q(g)."""

    def __init__(self, relation: str, detail: str = ""):
        self.relation = relation
        self.detail = detail
        message = f"relation '{relation}' violated"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class NotTriangular(CanonicalBasisError):
    """Triangular reduction produced a vector outside the canonical form."""


class NonTerminating(CanonicalBasisError):
    """An iterative tableau procedure exceeded its step bound."""


class UnsupportedModule(CanonicalBasisError):
    """No fundamental module is available for a requested weight."""


class ConfigError(CanonicalBasisError):
    """Invalid configuration file."""
