"""Automatic projection filter with adaptive Gaussian bijections."""

__version__ = "0.1.0"
