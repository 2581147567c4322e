"""Optimal ternary cyclic codes C_(1,e) from monomials over GF(3^m)."""

__version__ = "0.1.0"
