"""Exact arithmetic for Schur multiple zeta values.

Skew Young diagrams decorated with exponents define nested sums over
semistandard tableaux.  This package evaluates their truncations exactly,
decomposes diagrams into ribbons, verifies the associated determinant
identities, and produces closed forms for checkerboard-stair families.
"""

__version__ = "0.1.0"
