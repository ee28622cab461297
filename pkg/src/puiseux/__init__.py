"""
Loja Newton-Puiseux Expansion
=============================

Branch classes of plane curve germs at the origin, computed by rational
Newton-Puiseux steps over dynamically evaluated extension towers.
"""

from .branches import (
    DEFAULT_MAX_EXPANSION_DEPTH,
    BranchClass,
    NonSquarefreeInputError,
    PuiseuxExpander,
    PuiseuxSeries,
    back_substitution_order,
    expand_branches,
    extend_to,
    multiplicity,
    residue_degree_sum,
    split,
)
from .newton_polygon import NewtonEdge, NewtonPolygon, newton_polygon

__all__ = [
    "DEFAULT_MAX_EXPANSION_DEPTH",
    "BranchClass",
    "NonSquarefreeInputError",
    "PuiseuxExpander",
    "PuiseuxSeries",
    "NewtonEdge",
    "NewtonPolygon",
    "newton_polygon",
    "expand_branches",
    "multiplicity",
    "extend_to",
    "split",
    "back_substitution_order",
    "residue_degree_sum",
]
