"""Littelmann path crystals and adapted monomials."""
