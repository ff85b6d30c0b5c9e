"""Exact recomputation toolkit for order-3 orbifold invariants at central charge 24."""

__version__ = "0.1.0"
