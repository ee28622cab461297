"""
Loja Corpus Runner
==================

Known mappings with their exact exponents, run through the exact engine and
the numeric cross-check.

USAGE:
    from src.validation.corpus import CorpusRunner, BUILTIN_CORPUS

    runner = CorpusRunner()
    report = runner.run(BUILTIN_CORPUS)
    print(report.summary())

A case passes when the exact exponent string matches and, for finite
exponents with verification enabled, the numeric cross-check passes.
"""

import json
import logging
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from ..engine.engine_config import EngineConfig, get_engine_config
from ..engine.engine_models import LojasiewiczResult
from ..engine.exponent_engine import ExponentEngine
from ..errors import LojaError
from ..orchestrator.parser import InputDocument
from .numeric_validator import EstimateReport, validate
from .validation_config import DEFAULT_SAMPLE_CONFIG, SampleConfig

logger = logging.getLogger(__name__)


@dataclass
class CorpusCase:
    """A mapping whose exponent is known by hand."""
    name: str
    components: Tuple[str, ...]
    expected: str                      # "7/2", "inf", ...
    tags: List[str] = field(default_factory=list)
    notes: str = ""
    # last: the name shadows dataclasses.field for the rest of the class body
    field: str = "rational"

    def document(self) -> InputDocument:
        return InputDocument(components=list(self.components), field=self.field)


@dataclass
class CaseResult:
    """Result of running one corpus case."""
    case: CorpusCase
    exponent: Optional[str]
    matched: bool
    duration_seconds: float
    result: Optional[LojasiewiczResult] = None
    numeric: Optional[EstimateReport] = None
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.matched and (self.numeric is None or self.numeric.passed)


@dataclass
class CorpusReport:
    """Aggregated corpus report."""
    run_at: str
    seed: int
    total_cases: int
    passed: int
    failed: int
    results: List[CaseResult]

    @property
    def pass_rate(self) -> float:
        return self.passed / self.total_cases if self.total_cases > 0 else 0.0

    def summary(self) -> str:
        """Plain-text table of cases, failures listed last."""
        lines = [
            "=" * 60,
            "LOJA CORPUS REPORT",
            "=" * 60,
            f"Run at:      {self.run_at}",
            f"Seed:        {self.seed}",
            f"Cases:       {self.total_cases}",
            f"Passed:      {self.passed} ({self.pass_rate:.0%})",
            f"Failed:      {self.failed}",
            "",
            "--- Cases ---",
        ]
        for r in self.results:
            numeric = r.numeric.verdict if r.numeric is not None else "-"
            lines.append(
                f"  {r.case.name:28s} exact={r.exponent or 'error':6s} expected={r.case.expected:6s} "
                f"numeric={numeric:4s} {r.duration_seconds:6.2f}s"
            )
        failed_cases = [r for r in self.results if not r.passed]
        if failed_cases:
            lines.append("")
            lines.append("--- Failed Cases ---")
            for r in failed_cases:
                lines.append(f"  {r.case.name}: {', '.join(r.case.components)}")
                if r.error:
                    lines.append(f"    error: {r.error}")
                if r.case.notes:
                    lines.append(f"    notes: {r.case.notes}")
        lines.append("")
        lines.append("=" * 60)
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready dict; numeric sections use EstimateReport.to_dict."""
        return {
            "run_at": self.run_at,
            "seed": self.seed,
            "total_cases": self.total_cases,
            "passed": self.passed,
            "failed": self.failed,
            "pass_rate": round(self.pass_rate, 3),
            "cases": [
                {
                    "name": r.case.name,
                    "components": list(r.case.components),
                    "field": r.case.field,
                    "expected": r.case.expected,
                    "exponent": r.exponent,
                    "matched": r.matched,
                    "passed": r.passed,
                    "duration_seconds": round(r.duration_seconds, 4),
                    "numeric": r.numeric.to_dict() if r.numeric is not None else None,
                    "error": r.error,
                }
                for r in self.results
            ],
        }


class CorpusRunner:
    """Runs corpus cases through the engine and, optionally, the validator."""

    def __init__(self, config: Optional[EngineConfig] = None,
                 sample_config: SampleConfig = DEFAULT_SAMPLE_CONFIG):
        self.config = config or get_engine_config()
        self.sample_config = sample_config
        self.engine = ExponentEngine(self.config)

    def run_case(self, case: CorpusCase, verify: bool = True) -> CaseResult:
        start = time.perf_counter()
        try:
            result = self.engine.exponent(case.document().to_mapping())
            numeric = validate(result, self.sample_config) if verify and result.is_finite else None
        except (LojaError, ValueError) as exc:
            logger.error(f"Corpus case {case.name} failed: {exc}")
            return CaseResult(case, None, False, time.perf_counter() - start, error=str(exc))
        exponent = result.exponent_str()
        return CaseResult(
            case=case,
            exponent=exponent,
            matched=exponent == case.expected,
            duration_seconds=time.perf_counter() - start,
            result=result,
            numeric=numeric,
        )

    def run(self, cases: List[CorpusCase], verify: bool = True) -> CorpusReport:
        results = [self.run_case(case, verify) for case in cases]
        passed = sum(1 for r in results if r.passed)
        return CorpusReport(
            run_at=datetime.now(timezone.utc).isoformat(),
            seed=self.sample_config.seed,
            total_cases=len(results),
            passed=passed,
            failed=len(results) - passed,
            results=results,
        )

    def save_report(self, report: CorpusReport, path: Path) -> None:
        """Write the report as indented JSON, creating parent directories."""
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            json.dump(report.to_dict(), f, indent=2)
        logger.info(f"Corpus report saved to {path}")


# ============================================================================
# BUILT-IN CORPUS
# ============================================================================

def _monomial_cases() -> List[CorpusCase]:
    cases = []
    for a in range(1, 5):
        for b in range(1, 5):
            cases.append(CorpusCase(
                name=f"monomials_{a}_{b}",
                components=(f"x^{a}", f"y^{b}"),
                expected=str(max(a, b)),
                notes="exponent max(a, b), attained on an axis",
                tags=["monomial"],
            ))
    return cases


BUILTIN_CORPUS: List[CorpusCase] = [
    CorpusCase(
        name="identity",
        components=("x", "y"),
        expected="1",
        tags=["anchor"],
    ),
    *_monomial_cases(),
    CorpusCase(
        name="cusp_with_x2y",
        components=("y^2 - x^3", "x^2*y"),
        expected="7/2",
        notes="cusp branch gives 7/2, the axes give 2 and 3",
        tags=["anchor", "singular"],
    ),
    CorpusCase(
        name="cusp_with_x2",
        components=("y^2 - x^3", "x^2"),
        expected="2",
        tags=["anchor", "singular"],
    ),
    CorpusCase(
        name="two_cusps",
        components=("y^2 - x^3", "x^2 - y^3"),
        expected="2",
        tags=["anchor", "singular"],
    ),
    CorpusCase(
        name="node_with_line",
        components=("y^2 - x^2 - x^3", "x"),
        expected="2",
        notes="regular parts on both node branches; x = 0 gives 2",
        tags=["regular_part"],
    ),
    CorpusCase(
        name="conjugate_lines",
        components=("x^2 + y^2", "x*y"),
        expected="2",
        notes="y = a1*x with a1^2 = -1 is one class of residue degree 2",
        tags=["tower"],
    ),
    CorpusCase(
        name="gaussian_linear",
        components=("x + i*y", "x - i*y"),
        expected="1",
        field="gaussian",
        tags=["gaussian"],
    ),
    CorpusCase(
        name="single_component",
        components=("x*y",),
        expected="inf",
        notes="every branch lies in the zero set",
        tags=["infinite"],
    ),
    CorpusCase(
        name="single_cusp",
        components=("y^2 - x^3",),
        expected="inf",
        tags=["infinite"],
    ),
    CorpusCase(
        name="common_curve",
        components=("x*y", "x^2"),
        expected="inf",
        notes="x = 0 is a common zero curve",
        tags=["infinite"],
    ),
    CorpusCase(
        name="identically_zero",
        components=("0", "0"),
        expected="inf",
        tags=["infinite"],
    ),
]
