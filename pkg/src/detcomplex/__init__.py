"""Exact combinatorics of the complex family attached to a generic matrix."""

__version__ = "0.1.0"
