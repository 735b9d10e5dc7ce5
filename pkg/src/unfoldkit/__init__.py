"""Computational toolkit for unfolding bookkeeping in exceptional groups."""

__version__ = "0.1.0"
