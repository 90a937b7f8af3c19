"""Deterministic CSV and text output."""

from __future__ import annotations

import csv
import io
import logging
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import TextIO

logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 17


def fmt_float(value: float) -> str:
    """Fixed 17-significant-digit formatting; ``-0`` is normalized to ``0``."""
    if value == 0.0:
        value = 0.0
    return f"{value:.{SIGNIFICANT_DIGITS}g}"


def write_csv(
    header: Sequence[str], rows: Iterable[Sequence[float | str]], target: str | Path | TextIO
) -> None:
    """Write a header and rows; floats use :func:`fmt_float`, lines end with ``\\n``."""

    def cell(value: float | str) -> str:
        return value if isinstance(value, str) else fmt_float(float(value))

    def dump(stream: TextIO) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([cell(v) for v in row])

    if isinstance(target, (str, Path)):
        with open(target, "w", encoding="utf-8", newline="") as f:
            dump(f)
        logger.info("Wrote %s", target)
    else:
        dump(target)


def csv_text(header: Sequence[str], rows: Iterable[Sequence[float | str]]) -> str:
    buffer = io.StringIO()
    write_csv(header, rows, buffer)
    return buffer.getvalue()


def write_lines(lines: Iterable[str], target: str | Path | TextIO) -> None:
    text = "".join(f"{line}\n" for line in lines)
    if isinstance(target, (str, Path)):
        Path(target).write_text(text, encoding="utf-8")
        logger.info("Wrote %s", target)
    else:
        target.write(text)
