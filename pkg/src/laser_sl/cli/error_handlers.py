"""Exception to exit-code mapping for the command line.

Provides consistent error handling and logging across all subcommands:
0 success, 1 unexpected error, 2 validation or configuration error, 3 numerical failure.
"""

from __future__ import annotations

import logging
import sys
from typing import TextIO

import pydantic

from laser_sl.core.exceptions import (
    EXIT_VALIDATION,
    LaserSLError,
    NumericalError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_UNEXPECTED = 1


def _describe_pydantic(exc: pydantic.ValidationError) -> str:
    parts = []
    for error in exc.errors():
        where = ".".join(str(p) for p in error["loc"]) or "<root>"
        parts.append(f"{where}: {error['msg']}")
    return "; ".join(parts)


def handle_error(exc: BaseException, stream: TextIO | None = None) -> int:
    """Log ``exc``, print a one-line reason and return the process exit code.

    Args:
        exc: The exception that ended the subcommand.
        stream: Where the one-line reason goes (default stderr).

    Returns:
        The exit code for ``exc``.
    """
    stream = stream or sys.stderr
    if isinstance(exc, NumericalError):
        exc.log(level=logging.ERROR)
        print(f"error: {exc.code}: {exc.message}", file=stream)
        return exc.exit_code
    if isinstance(exc, LaserSLError):
        exc.log(level=logging.WARNING)
        print(f"error: {exc.code}: {exc.message}", file=stream)
        return exc.exit_code
    if isinstance(exc, pydantic.ValidationError):
        reason = _describe_pydantic(exc)
        logger.warning("Invalid configuration: %s", reason)
        print(f"error: VALIDATION_ERROR: {reason}", file=stream)
        return EXIT_VALIDATION

    logger.exception("Unexpected error: %s", exc)
    print(f"error: INTERNAL_ERROR: {exc}", file=stream)
    return EXIT_UNEXPECTED
