"""Exact character tables of GL(n, q) for n <= 5 by Green's method."""

__version__ = "0.1.0"
