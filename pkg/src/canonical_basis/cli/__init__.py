"""Command-line interface for canonical-basis."""

from canonical_basis.cli.main import cli

__all__ = ["cli"]
