"""Exact invariant-theory computations for reductive symmetric pairs."""

__version__ = "0.1.0"
