"""Exact computations in interpolation categories of wreath products."""

__version__ = "0.1.0"
