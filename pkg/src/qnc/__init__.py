"""Exact computer algebra for the q-deformed Euclidean and Minkowski quantum spaces."""

__version__ = "0.1.0"
