"""Exact computational companions to classical applications of the Subspace Theorem."""

__version__ = "0.1.0"
