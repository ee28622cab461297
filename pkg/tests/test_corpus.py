"""
Tests for the built-in corpus of known exponents.

These tests check:
1. Every built-in case reproduces its expected exponent exactly
2. Every finite case also passes the numeric cross-check
3. Reports summarize and serialize

Usage:
    pytest tests/test_corpus.py -v
"""

import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.engine import EngineConfig
from src.validation import SampleConfig
from src.validation.corpus import BUILTIN_CORPUS, CorpusCase, CorpusRunner


@pytest.fixture(scope="module")
def runner():
    return CorpusRunner(EngineConfig(), SampleConfig(seed=7))


@pytest.fixture(scope="module")
def exact_report(runner):
    return runner.run(BUILTIN_CORPUS, verify=False)


# =============================================================================
# EXACT RESULTS
# =============================================================================

class TestBuiltinCorpus:
    """Expected exponents from the built-in corpus."""

    def test_names_are_unique(self):
        names = [case.name for case in BUILTIN_CORPUS]
        assert len(names) == len(set(names))

    def test_every_case_matches(self, exact_report):
        mismatches = [(r.case.name, r.exponent, r.error) for r in exact_report.results if not r.matched]
        assert mismatches == []
        assert exact_report.passed == exact_report.total_cases
        assert exact_report.pass_rate == 1.0

    def test_exact_runs_have_no_numeric_section(self, exact_report):
        assert all(r.numeric is None for r in exact_report.results)

    def test_bad_case_is_reported_not_raised(self, runner):
        case = CorpusCase(name="broken", components=("x +",), expected="1")
        result = runner.run_case(case, verify=False)
        assert not result.passed
        assert result.exponent is None
        assert "missing its right operand" in result.error

    def test_case_defaults(self):
        first = CorpusCase(name="a", components=("x", "y"), expected="1")
        second = CorpusCase(name="b", components=("x",), expected="inf")
        assert first.field == "rational"
        assert first.tags == [] and first.notes == ""
        first.tags.append("extra")
        assert second.tags == []
        assert first.document().field == "rational"

    def test_wrong_expectation_fails(self, runner):
        case = CorpusCase(name="wrong", components=("x", "y"), expected="2")
        result = runner.run_case(case, verify=False)
        assert result.exponent == "1"
        assert not result.matched


# =============================================================================
# NUMERIC CROSS-CHECK
# =============================================================================

class TestVerifiedCorpus:
    """Finite cases through the validator."""

    @pytest.mark.parametrize(
        "case", [c for c in BUILTIN_CORPUS if c.expected != "inf"], ids=lambda c: c.name
    )
    def test_finite_case_passes(self, runner, case):
        result = runner.run_case(case, verify=True)
        assert result.matched, result.error
        assert result.numeric is not None
        assert result.numeric.passed, result.numeric.summary()
        assert result.duration_seconds < 10

    def test_report_carries_seed(self, runner):
        anchors = [case for case in BUILTIN_CORPUS if "anchor" in case.tags]
        report = runner.run(anchors, verify=True)
        assert report.failed == 0
        assert report.seed == 7

    def test_infinite_case_skips_validation(self, runner):
        (case,) = [c for c in BUILTIN_CORPUS if c.name == "single_component"]
        result = runner.run_case(case, verify=True)
        assert result.passed
        assert result.numeric is None


# =============================================================================
# REPORTS
# =============================================================================

class TestCorpusReport:
    """Summary text and JSON export."""

    def test_summary(self, exact_report):
        text = exact_report.summary()
        assert "LOJA CORPUS REPORT" in text
        assert "cusp_with_x2y" in text
        assert "Failed Cases" not in text

    def test_save_report(self, runner, exact_report, tmp_path):
        path = tmp_path / "reports" / "corpus.json"
        runner.save_report(exact_report, path)
        data = json.loads(path.read_text())
        assert data["total_cases"] == len(BUILTIN_CORPUS)
        assert data["pass_rate"] == 1.0
        by_name = {case["name"]: case for case in data["cases"]}
        assert by_name["cusp_with_x2y"]["exponent"] == "7/2"
        assert by_name["common_curve"]["exponent"] == "inf"
