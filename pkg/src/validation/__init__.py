"""
Loja Numeric Validation
=======================

Floating-point cross-check of exact exponents and the built-in corpus.
"""

from .validation_config import DEFAULT_SAMPLE_CONFIG, SampleConfig
from .numeric_validator import (
    AmbientEstimate,
    AmbientVerdict,
    BranchSlope,
    DegenerateFitError,
    EstimateReport,
    NumericCurve,
    NumericMapping,
    ambient_check,
    branch_slope,
    conjugate_residuals,
    estimate_ambient,
    estimate_S,
    tower_embeddings,
    validate,
)
from .corpus import BUILTIN_CORPUS, CaseResult, CorpusCase, CorpusReport, CorpusRunner

__all__ = [
    "SampleConfig",
    "DEFAULT_SAMPLE_CONFIG",
    "AmbientEstimate",
    "AmbientVerdict",
    "BranchSlope",
    "DegenerateFitError",
    "EstimateReport",
    "NumericCurve",
    "NumericMapping",
    "ambient_check",
    "branch_slope",
    "conjugate_residuals",
    "estimate_ambient",
    "estimate_S",
    "tower_embeddings",
    "validate",
    "BUILTIN_CORPUS",
    "CaseResult",
    "CorpusCase",
    "CorpusReport",
    "CorpusRunner",
]
