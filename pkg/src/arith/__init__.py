"""
Loja Exact Arithmetic
=====================

Base fields (Q, Q(i)) and dynamically built algebraic extension towers.
"""

from .numbers import (
    ONE,
    ZERO,
    GaussianRational,
    Rational,
    format_fraction,
    format_gaussian,
)
from .tower import (
    DEFAULT_MAX_TOWER_DEGREE,
    AlgebraicNumber,
    ExtensionTower,
    SplitEvent,
    TowerDegreeExceededError,
    TowerLevel,
    TowerMismatchError,
    TowerProjection,
    TowerSplitError,
    add,
    adjoin_root,
    certify_nonzero,
    mul,
    neg,
    sub,
    try_invert,
)

__all__ = [
    "Rational",
    "GaussianRational",
    "ZERO",
    "ONE",
    "format_fraction",
    "format_gaussian",
    "DEFAULT_MAX_TOWER_DEGREE",
    "AlgebraicNumber",
    "ExtensionTower",
    "TowerLevel",
    "SplitEvent",
    "TowerProjection",
    "TowerSplitError",
    "TowerMismatchError",
    "TowerDegreeExceededError",
    "add",
    "sub",
    "mul",
    "neg",
    "try_invert",
    "adjoin_root",
    "certify_nonzero",
]
