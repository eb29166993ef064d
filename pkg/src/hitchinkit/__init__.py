"""Exact computational toolkit for Hitchin systems in low rank."""

__version__ = "0.1.0"
