"""Characteristic-2 Weierstrass toolkit.

Modules are organized by responsibility:
- ``coefficients``: F_{2^m} and F_{2^m}(u) coefficient fields
- ``polys``: polynomials in t and the text syntax parser
- ``quasi``: quasi-discriminant, coordinate changes, normal form
- ``rdp``: rational double point classification
- ``census``: elliptic curves over F2 and the residual divisors
"""
