"""Finite pointed braided categories, Drinfeld centers and relative tensor products."""

__version__ = "0.1.0"
