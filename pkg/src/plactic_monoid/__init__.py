"""
plactic_monoid - plactic monoids of finite and infinite rank.

Schensted insertion, row and column normal forms, the Schutzenberger
involution, and constructive witnesses that principal ideals intersect.
"""
__version__ = "1.0"
