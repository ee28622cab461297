"""
Loja Exponent Engine
====================

Exact local Lojasiewicz exponents of polynomial mappings C^2 -> C^m.
"""

from .engine_config import EngineConfig, get_engine_config
from .engine_models import (
    BaseField,
    BranchExponent,
    IntersectionTable,
    LojasiewiczResult,
    MappingInput,
    NormalizedProblem,
    TableRow,
    WitnessCurve,
    format_value,
)
from .exponent_engine import ExponentEngine, in_exponent_set, lojasiewicz_exponent, shear_sequence

__all__ = [
    "EngineConfig",
    "get_engine_config",
    "BaseField",
    "BranchExponent",
    "IntersectionTable",
    "LojasiewiczResult",
    "MappingInput",
    "NormalizedProblem",
    "TableRow",
    "WitnessCurve",
    "format_value",
    "ExponentEngine",
    "in_exponent_set",
    "lojasiewicz_exponent",
    "shear_sequence",
]
