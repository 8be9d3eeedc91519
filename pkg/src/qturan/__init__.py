"""Certified Turan-type inequalities for q-series families."""

__version__ = "0.1.0"
