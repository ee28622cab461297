"""
Loja Logging Configuration
==========================

Log records go to stderr so that stdout carries only the exponent, the
table or the JSON report. Engine and validator records carry a "stage"
(normalize, branches, table, result, verify) and optional context such as
the branch index or the shear, passed with logger.info(..., extra={...}).

Usage:
    from src.orchestrator.logging_config import setup_logging

    setup_logging(level="DEBUG", json_output=True)
"""

import json
import logging
import sys
from datetime import datetime, timezone
from typing import Any, Dict, Optional, TextIO

CONTEXT_FIELDS = ("stage", "branch", "component", "shear", "exponent", "duration")


def record_context(record: logging.LogRecord) -> Dict[str, Any]:
    """Context fields present on a record, in CONTEXT_FIELDS order."""
    context = {}
    for key in CONTEXT_FIELDS:
        value = getattr(record, key, None)
        if value is not None:
            context[key] = value
    return context


class JSONFormatter(logging.Formatter):
    """
    One JSON object per line:
        {"ts": "...", "level": "INFO", "logger": "src.engine.exponent_engine",
         "msg": "...", "stage": "result", "exponent": "7/2"}
    """

    def format(self, record: logging.LogRecord) -> str:
        entry: Dict[str, Any] = {
            "ts": datetime.fromtimestamp(record.created, timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "msg": record.getMessage(),
        }
        entry.update(record_context(record))
        if record.exc_info and record.exc_info[0] is not None:
            entry["exception"] = self.formatException(record.exc_info)
        return json.dumps(entry, default=str)


class StageFormatter(logging.Formatter):
    """Human-readable lines with the stage and context appended."""

    def __init__(self):
        super().__init__("%(asctime)s %(levelname)-7s %(name)s: %(message)s", datefmt="%H:%M:%S")

    def format(self, record: logging.LogRecord) -> str:
        line = super().format(record)
        context = record_context(record)
        stage = context.pop("stage", None)
        if stage:
            line = f"{line} [{stage}]"
        if context:
            line += " " + " ".join(f"{k}={v}" for k, v in context.items())
        return line


def setup_logging(level: str = "WARNING", json_output: bool = False,
                  stream: Optional[TextIO] = None) -> logging.Logger:
    """
    Configure the root logger. Safe to call repeatedly: previous handlers
    are replaced.

    Args:
        level: DEBUG, INFO, WARNING or ERROR (unknown names fall back to WARNING)
        json_output: JSON lines instead of plain text
        stream: Destination, stderr by default
    """
    root = logging.getLogger()
    root.setLevel(getattr(logging, str(level).upper(), logging.WARNING))
    root.handlers.clear()

    handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    handler.setFormatter(JSONFormatter() if json_output else StageFormatter())
    root.addHandler(handler)

    root.debug("Logging configured: level=%s json=%s", level, json_output)
    return root
