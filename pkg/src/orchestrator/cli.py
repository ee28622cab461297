"""
Loja Command-Line Interface
===========================

Computes the local Lojasiewicz exponent at the origin of a polynomial
mapping given by its components.

Usage:
    python -m src.orchestrator.cli "y^2-x^3" "x^2*y"            # 7/2
    python -m src.orchestrator.cli --json x y                   # JSON report
    python -m src.orchestrator.cli --table --verify --seed 7 "x^3" "y^2"
    python -m src.orchestrator.cli --input mapping.json

Exit codes:
    0  success
    2  parse or validation error
    3  resource guard exceeded (tower degree, expansion depth)
    4  --verify reported FAIL
"""

import argparse
import logging
import sys
from fractions import Fraction
from typing import Optional, Sequence

from ..engine.engine_config import get_engine_config, get_env
from ..engine.exponent_engine import ExponentEngine
from ..errors import InputValidationError, ResourceGuardError
from ..validation.numeric_validator import DegenerateFitError, validate
from ..validation.validation_config import DEFAULT_SAMPLE_CONFIG
from .logging_config import setup_logging
from .parser import InputDocument, load_document
from .report import ReportDocument

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_GUARD = 3
EXIT_VERIFY = 4


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"'{text}' is not a rational number")


def _u64(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError("value cannot be negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loja",
        description="Exact local Lojasiewicz exponent of a polynomial mapping C^2 -> C^m at the origin",
    )
    parser.add_argument("components", nargs="*", help="Components f_j as polynomials in x, y")
    parser.add_argument("--input", metavar="FILE", help='JSON file {"components": [...], "field": ...}')
    parser.add_argument("--field", choices=["rational", "gaussian"], help="Coefficient field (default: rational)")
    parser.add_argument("--json", action="store_true", help="Print the machine-readable report")
    parser.add_argument("--table", action="store_true", help="Print the branch table and witness")
    parser.add_argument("--verify", action="store_true", help="Run the numeric cross-check")
    parser.add_argument("--seed", type=_u64, help="Seed for sampling and the random shear mode")
    parser.add_argument("--witness-degree", type=_positive, help="t-degree of the witness (default: 12)")
    parser.add_argument("--max-tower-degree", type=_positive, help="Guard on tower degree (default: 256)")
    parser.add_argument("--shear", type=_rational, help="Use x -> x + c*y with this c")
    parser.add_argument("--random-shear", action="store_true", help="Seeded random shear instead of 0, 1, -1, ...")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    parser.add_argument("--log-json", action="store_true", help="JSON log lines on stderr")
    return parser


def _document(args: argparse.Namespace) -> InputDocument:
    if args.input and args.components:
        raise InputValidationError("give components either as arguments or with --input, not both")
    if args.input:
        document = load_document(args.input)
    elif args.components:
        document = InputDocument(components=list(args.components))
    else:
        raise InputValidationError("no components given")
    if args.field:
        document = document.model_copy(update={"field": args.field})
    return document


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, compute, print. Returns the exit code."""
    args = build_parser().parse_args(argv)

    level = "DEBUG" if args.verbose else get_env("LOJA_LOG_LEVEL", "WARNING")
    setup_logging(level=level, json_output=args.log_json)

    try:
        config = get_engine_config().with_overrides(
            witness_degree=args.witness_degree,
            max_tower_degree=args.max_tower_degree,
            shear=args.shear,
            random_shear=True if args.random_shear else None,
            seed=args.seed,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    try:
        document = _document(args)
        mapping = document.to_mapping()
        result = ExponentEngine(config).exponent(mapping)
    except InputValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD

    numeric = None
    exit_code = EXIT_OK
    if args.verify:
        try:
            numeric = validate(result, DEFAULT_SAMPLE_CONFIG.with_seed(config.seed))
            if not numeric.passed:
                exit_code = EXIT_VERIFY
        except DegenerateFitError as exc:
            print(f"verify: {exc}", file=sys.stderr)
            exit_code = EXIT_VERIFY

    report = ReportDocument.from_result(result, field=document.field, numeric=numeric)
    if args.json:
        print(report.to_json())
    else:
        print(report.exponent)
        if args.table:
            print(report.render_table())
        if numeric is not None:
            print(numeric.summary())
    if exit_code == EXIT_VERIFY:
        print("error: numeric cross-check failed", file=sys.stderr)
    return exit_code


def main():
    """Main CLI entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
