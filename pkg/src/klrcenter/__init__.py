"""
klrcenter: exact computations with cyclotomic quiver Hecke (KLR) algebras,
their centers and current-algebra actions, and desk-scale comparisons with
Grassmannian cohomology rings.
"""

__version__ = "0.1.0"
