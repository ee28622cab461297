"""
Tests for input parsing, report documents and the command-line interface.

These tests check:
1. Component grammar, implicit multiplication and error positions
2. JSON input documents
3. Report documents survive a JSON round trip
4. CLI output and exit codes

Usage:
    pytest tests/test_cli.py -v
"""

import io
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.arith.numbers import GaussianRational
from src.engine import EngineConfig, ExponentEngine
from src.errors import InputValidationError
from src.orchestrator import (
    EXIT_GUARD,
    EXIT_INPUT,
    EXIT_OK,
    InputDocument,
    InputSyntaxError,
    ReportDocument,
    load_document,
    parse,
    parse_component,
    run,
)
from src.orchestrator.logging_config import setup_logging
from src.poly import BiPoly

X, Y = BiPoly.x(), BiPoly.y()


# =============================================================================
# COMPONENT PARSING
# =============================================================================

class TestParseComponent:
    """Component text to BiPoly."""

    def test_basic(self):
        assert parse_component("y^2 - x^3") == Y**2 - X**3

    def test_implicit_multiplication(self):
        assert parse_component("2x y") == 2 * X * Y
        assert parse_component("3(x + y)") == 3 * X + 3 * Y
        assert parse_component("(x)(y)") == X * Y

    def test_expansion_and_rationals(self):
        assert parse_component("(x + y)^2") == X**2 + 2 * X * Y + Y**2
        assert parse_component("x/2 - 3*y/4") == Fraction(1, 2) * X - Fraction(3, 4) * Y

    def test_unary_signs(self):
        assert parse_component("-x + -y") == -X - Y
        assert parse_component("x*-y") == -X * Y

    def test_zero(self):
        assert parse_component("x - x").is_zero()

    def test_gaussian_coefficients(self):
        f = parse_component("(1 + i)*x - i*y", "gaussian")
        assert f.coefficient(1, 0) == GaussianRational(1, 1)
        assert f.coefficient(0, 1) == GaussianRational(0, -1)

    def test_imaginary_unit_needs_gaussian_field(self):
        with pytest.raises(InputSyntaxError) as info:
            parse_component("x + i*y")
        assert (info.value.line, info.value.column) == (1, 5)

    def test_operator_position(self):
        with pytest.raises(InputSyntaxError) as info:
            parse_component("x + * y")
        assert info.value.column == 5
        assert "line 1, column 5" in str(info.value)

    def test_float_rejected_on_second_line(self):
        with pytest.raises(InputSyntaxError) as info:
            parse_component("x +\n 2.5")
        assert (info.value.line, info.value.column) == (2, 3)

    def test_unbalanced_parentheses(self):
        with pytest.raises(InputSyntaxError) as info:
            parse_component("x + (y")
        assert (info.value.line, info.value.column) == (1, 7)
        with pytest.raises(InputSyntaxError):
            parse_component("x + y)")

    @pytest.mark.parametrize("text", ["", "x +", "x z", "x ** y + ", "()", "1 2"])
    def test_malformed(self, text):
        with pytest.raises(InputSyntaxError):
            parse_component(text)

    def test_not_a_polynomial(self):
        with pytest.raises(InputValidationError) as info:
            parse_component("1/x")
        assert not isinstance(info.value, InputSyntaxError)


# =============================================================================
# DOCUMENTS
# =============================================================================

class TestInputDocument:
    """JSON input documents."""

    def test_parse(self):
        document = parse('{"components": ["x", "y^2"], "field": "rational"}')
        mapping = document.to_mapping()
        assert mapping.m == 2
        assert mapping.components[1] == Y**2

    def test_empty_components(self):
        with pytest.raises(InputValidationError):
            parse('{"components": []}')

    def test_unknown_field(self):
        with pytest.raises(InputValidationError):
            parse('{"components": ["x"], "field": "real"}')

    def test_invalid_json_position(self):
        with pytest.raises(InputSyntaxError) as info:
            parse('{\n  "components": [x]\n}')
        assert info.value.line == 2

    def test_component_index_in_errors(self):
        document = InputDocument(components=["x", "y +* 2"])
        with pytest.raises(InputSyntaxError) as info:
            document.to_mapping()
        assert str(info.value).startswith("component 2:")

    def test_constant_term_rejected(self):
        with pytest.raises(InputValidationError):
            InputDocument(components=["x + 1", "y"]).to_mapping()

    def test_load_document(self, tmp_path):
        path = tmp_path / "mapping.json"
        path.write_text(json.dumps({"components": ["x + i*y", "x - i*y"], "field": "gaussian"}))
        document = load_document(path)
        assert document.field == "gaussian"
        assert document.to_mapping().m == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputValidationError):
            load_document(tmp_path / "absent.json")


class TestReportDocument:
    """Report models."""

    def setup_method(self):
        engine = ExponentEngine(EngineConfig())
        mapping = InputDocument(components=["y^2 - x^3", "x^2*y"]).to_mapping()
        self.result = engine.exponent(mapping)

    def test_fields(self):
        report = ReportDocument.from_result(self.result)
        assert report.exponent == "7/2"
        assert report.isolated_zero
        assert report.columns == [1, 2]
        assert report.components == ["-x^3 + y^2", "x^2*y"]
        assert report.witness is not None
        assert report.maximizing_branches == [report.witness.branch]
        assert any(row.lambda_ == "7/2" and row.maximizing for row in report.branches)

    def test_json_round_trip(self):
        report = ReportDocument.from_result(self.result)
        text = report.to_json()
        assert '"lambda": "7/2"' in text
        again = ReportDocument.model_validate_json(text)
        assert again == report
        assert again.to_json() == text

    def test_render_table(self):
        table = ReportDocument.from_result(self.result).render_table()
        assert "BRANCH TABLE" in table
        assert "Witness" in table


# =============================================================================
# CLI
# =============================================================================

class TestCli:
    """Exit codes and printed output."""

    def test_prints_exponent(self, capsys):
        assert run(["y^2-x^3", "x^2*y"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "7/2"

    def test_json_output(self, capsys):
        assert run(["--json", "x", "y"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["exponent"] == "1"
        assert data["isolated_zero"] is True
        assert data["numeric"] is None

    def test_infinite_exponent(self, capsys):
        assert run(["x*y"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "inf"

    def test_constant_term_exit_code(self, capsys):
        assert run(["x + 1", "y"]) == EXIT_INPUT
        assert "does not vanish" in capsys.readouterr().err

    def test_syntax_error_reports_position(self, capsys):
        assert run(["x", "y +* 2"]) == EXIT_INPUT
        err = capsys.readouterr().err
        assert "component 2" in err
        assert "line 1, column 4" in err

    def test_no_components(self, capsys):
        assert run([]) == EXIT_INPUT

    def test_input_file(self, tmp_path, capsys):
        path = tmp_path / "mapping.json"
        path.write_text(json.dumps({"components": ["x^3", "y^2"]}))
        assert run(["--input", str(path)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "3"

    def test_input_file_and_arguments_conflict(self, tmp_path, capsys):
        path = tmp_path / "mapping.json"
        path.write_text(json.dumps({"components": ["x"]}))
        assert run(["--input", str(path), "y"]) == EXIT_INPUT

    def test_gaussian_field_flag(self, capsys):
        assert run(["--field", "gaussian", "x + i*y", "x - i*y"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "1"

    def test_bad_shear(self, capsys):
        assert run(["--shear", "0", "x*y", "x + y"]) == EXIT_INPUT

    @pytest.mark.parametrize("shear", ["1", "-1", "2", "1/2", "-3"])
    def test_exponent_independent_of_shear(self, shear, capsys):
        assert run(["--json", "--shear", shear, "y^2-x^3", "x^2*y"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["exponent"] == "7/2"
        assert data["shear"] == shear

    def test_tower_guard(self, capsys):
        assert run(["--max-tower-degree", "1", "x^2 + y^2", "x*y"]) == EXIT_GUARD
        assert "error:" in capsys.readouterr().err

    def test_table(self, capsys):
        assert run(["--table", "x^2 + y^2", "x*y"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("2\n")
        assert "BRANCH TABLE" in out
        assert "over " in out

    def test_verify(self, capsys):
        assert run(["--verify", "--seed", "3", "y^2-x^3", "x^2*y"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "NUMERIC CROSS-CHECK" in out
        assert "Verdict:            PASS" in out

    def test_verify_json(self, capsys):
        assert run(["--json", "--verify", "--seed", "3", "x", "y"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["numeric"]["verdict"] == "PASS"
        assert data["numeric"]["seed"] == 3

    def test_output_is_reproducible(self, capsys):
        argv = ["--json", "--verify", "--seed", "11", "y^2-x^3", "x^2*y"]
        run(argv)
        first = capsys.readouterr().out
        run(argv)
        second = capsys.readouterr().out
        assert first == second

    def test_invalid_seed(self):
        with pytest.raises(SystemExit):
            run(["--seed", "-4", "x", "y"])


# =============================================================================
# LOGGING
# =============================================================================

class TestLogging:
    """Log lines go to the configured stream with their context."""

    def test_json_lines(self):
        stream = io.StringIO()
        setup_logging(level="INFO", json_output=True, stream=stream)
        logging.getLogger("src.engine.test").info("done", extra={"stage": "result", "exponent": "7/2"})
        entry = json.loads(stream.getvalue().strip().splitlines()[-1])
        assert entry["msg"] == "done"
        assert entry["stage"] == "result"
        assert entry["exponent"] == "7/2"
        assert entry["level"] == "INFO"

    def test_plain_lines_carry_stage(self):
        stream = io.StringIO()
        setup_logging(level="DEBUG", stream=stream)
        logging.getLogger("src.engine.test").debug("row", extra={"stage": "table", "branch": 2})
        assert stream.getvalue().rstrip().endswith("row [table] branch=2")

    def test_level_filters(self):
        stream = io.StringIO()
        setup_logging(level="WARNING", stream=stream)
        logging.getLogger("src.engine.test").info("hidden")
        assert "hidden" not in stream.getvalue()

    def test_repeated_setup_keeps_one_handler(self):
        setup_logging(stream=io.StringIO())
        root = setup_logging(stream=io.StringIO())
        assert len(root.handlers) == 1
