"""Numerical laboratory for quantum boolean functions."""

__version__ = "0.1.0"
