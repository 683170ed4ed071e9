"""Exact computation with finite real and complex reflection groups.

Subpackages cover: exact cyclotomic arithmetic and linear algebra, Coxeter
systems and root combinatorics, conjugacy-class machinery, the monomial
groups G(de,e,n), invariant-theoretic data (Molien series, degrees, fake
degrees, regular elements), wreath-product character tables, and the
two-parameter Hecke algebra of the symmetric group with its link
invariants.
"""

from .cyclotomic import Cyclotomic, zeta, cyc
from .poly import LaurentPoly, RationalFunction, x_poly
from .matrix import Matrix

__all__ = [
    "Cyclotomic", "zeta", "cyc",
    "LaurentPoly", "RationalFunction", "x_poly",
    "Matrix",
]

__version__ = "0.1.0"
