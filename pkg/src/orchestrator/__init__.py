"""
Loja Orchestrator Module
========================

Command-line front end: input parsing, reports and logging setup.

Components:
    - parse_component / InputDocument: component text to BiPoly
    - ReportDocument: human and JSON output
    - run: the CLI entry point

Usage:
    python -m src.orchestrator.cli "y^2-x^3" "x^2*y"
"""

from .cli import EXIT_GUARD, EXIT_INPUT, EXIT_OK, EXIT_VERIFY, run
from .parser import InputDocument, InputSyntaxError, load_document, parse, parse_component
from .report import BranchRowModel, ReportDocument, WitnessModel

__all__ = [
    "run",
    "EXIT_OK",
    "EXIT_INPUT",
    "EXIT_GUARD",
    "EXIT_VERIFY",
    "InputDocument",
    "InputSyntaxError",
    "load_document",
    "parse",
    "parse_component",
    "BranchRowModel",
    "ReportDocument",
    "WitnessModel",
]
