"""Bound quiver algebras: maximal paths and unique-maximal-path decisions."""

__version__ = "0.1.0"
