"""Elliptic beta integrals with W(F4) symmetry and their basic hypergeometric limits."""

__version__ = "0.1.0"
