"""Sublinear one-sided-error triangle-freeness testing in the general graph model."""

__version__ = "0.1.0"
