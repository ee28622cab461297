"""
Loja Polynomial Algebra
=======================

Dense univariate and sparse bivariate polynomials over extension towers,
with the K[x][y] algorithms the exponent engine needs.
"""

from .algorithms import (
    divide_exact,
    gcd,
    pseudo_remainder,
    reduced_product,
    resultant_y,
    squarefree_part,
)
from .bipoly import BiPoly, linear_substitute, regular_in_y, shear
from .unipoly import UniPoly

__all__ = [
    "BiPoly",
    "UniPoly",
    "shear",
    "linear_substitute",
    "regular_in_y",
    "gcd",
    "squarefree_part",
    "resultant_y",
    "divide_exact",
    "pseudo_remainder",
    "reduced_product",
]
