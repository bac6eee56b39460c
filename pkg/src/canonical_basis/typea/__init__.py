"""Type A tableau crystals and the comparison with path monomials."""
