#!/usr/bin/env python3
"""
Loja Corpus Run
===============

Runs the built-in corpus through the exact engine and the numeric
cross-check, prints the summary and optionally saves a JSON report.

Usage:
    python scripts/run_corpus.py                         # exact + numeric
    python scripts/run_corpus.py --no-verify             # exact only
    python scripts/run_corpus.py --seed 42 --output reports/corpus.json
    python scripts/run_corpus.py --tag singular --verbose

Environment:
    Reads LOJA_* settings from .env
"""

import argparse
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.orchestrator.logging_config import setup_logging  # noqa: E402
from src.validation.corpus import BUILTIN_CORPUS, CorpusRunner  # noqa: E402
from src.validation.validation_config import DEFAULT_SAMPLE_CONFIG  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description="Run the Loja corpus")
    parser.add_argument("--no-verify", action="store_true", help="Skip the numeric cross-check")
    parser.add_argument("--seed", type=int, default=DEFAULT_SAMPLE_CONFIG.seed, help="Sampling seed")
    parser.add_argument("--tag", help="Only run cases carrying this tag")
    parser.add_argument("--output", type=Path, help="Write the JSON report here")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    parser.add_argument("--log-json", action="store_true", help="JSON log lines")
    args = parser.parse_args()

    setup_logging(level="DEBUG" if args.verbose else "INFO", json_output=args.log_json)

    cases = [c for c in BUILTIN_CORPUS if args.tag is None or args.tag in c.tags]
    if not cases:
        print(f"No corpus case carries the tag '{args.tag}'", file=sys.stderr)
        return 2

    runner = CorpusRunner(sample_config=DEFAULT_SAMPLE_CONFIG.with_seed(args.seed))
    report = runner.run(cases, verify=not args.no_verify)
    print(report.summary())

    if args.output:
        runner.save_report(report, args.output)

    return 0 if report.failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
