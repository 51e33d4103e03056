"""Exact computation of sums of squares of Littlewood-Richardson coefficients
and the Hilbert-series identities built from them."""

__version__ = "0.1.0"
