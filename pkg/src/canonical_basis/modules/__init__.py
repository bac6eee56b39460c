"""Concrete U_q-modules, tensor products and module files."""
