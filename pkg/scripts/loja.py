#!/usr/bin/env python3
"""
Loja command-line entry point.

Usage:
    python scripts/loja.py "y^2-x^3" "x^2*y"
    python scripts/loja.py --json --verify --seed 3 x y
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.orchestrator.cli import run  # noqa: E402

if __name__ == "__main__":
    sys.exit(run())
