"""Exact verification toolkit for the E6 monodromy computations on theta-divisor surfaces."""

__version__ = "0.1.0"
