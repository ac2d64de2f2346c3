"""Exact 2-distance colouring and proof-checking tools for planar graphs with max degree 5."""

__version__ = "0.1.0"
