"""Exact computations for the numerical side of rigid automorphic data."""

__version__ = "0.1.0"
