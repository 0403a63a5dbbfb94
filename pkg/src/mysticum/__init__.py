"""Exact computations on Pascal's hexagrammum mysticum."""

__version__ = "0.1.0"
