"""Braidforms - Homfly polynomials, Hecke inner products and Legendrian rulings."""

__version__ = "0.1.0"
