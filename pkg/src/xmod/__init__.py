"""Exact finite checks for crossed modules, butterflies and abelian 3-cocycles."""

__version__ = "0.1.0"
