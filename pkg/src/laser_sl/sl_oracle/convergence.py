"""Convergence tables of the second-order term toward the Gamma_- prediction."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from laser_sl.core.exceptions import ValidationError
from laser_sl.core.io import csv_text, write_csv
from laser_sl.core.settings import Settings, get_settings
from laser_sl.reservoir.density import SpectralDensity
from laser_sl.reservoir.gamma import Detuning, gamma_minus
from laser_sl.sl_oracle.kernels import second_order_term
from laser_sl.sl_oracle.reservoir import discretize

logger = logging.getLogger(__name__)

CSV_HEADER = ("lambda", "re_I_over_t", "im_I_over_t", "re_pred", "im_pred", "abs_err", "cr_mag")


@dataclass(frozen=True)
class ConvergenceRow:
    lam: float
    value: complex
    predicted: complex
    abs_error: float
    counter_rotating: float


@dataclass(frozen=True)
class ConvergenceTable:
    """Rows ordered by strictly decreasing lambda.

    Attributes:
        rows: One row per lambda: I/t, the prediction -Gamma_-, their distance and
            the magnitude of the counter-rotating term.
        t: Macroscopic time.
        gamma: Gamma_- the rows converge to.
        floor: Discretization floor |I_M - I_2M| / t at the smallest lambda.
        monotone: Errors strictly decrease until they reach the floor.
    """

    rows: tuple[ConvergenceRow, ...]
    t: float
    gamma: complex
    floor: float
    monotone: bool

    @property
    def errors(self) -> list[float]:
        return [row.abs_error for row in self.rows]

    def rates(self) -> list[float]:
        """Empirical error ratios between consecutive rows."""
        out = []
        for prev, row in zip(self.rows, self.rows[1:]):
            out.append(prev.abs_error / row.abs_error if row.abs_error > 0 else float("inf"))
        return out

    def csv_rows(self) -> list[list[float]]:
        return [
            [
                row.lam,
                row.value.real,
                row.value.imag,
                row.predicted.real,
                row.predicted.imag,
                row.abs_error,
                row.counter_rotating,
            ]
            for row in self.rows
        ]

    def to_csv(self, target: str | Path | TextIO) -> None:
        write_csv(CSV_HEADER, self.csv_rows(), target)

    def csv(self) -> str:
        return csv_text(CSV_HEADER, self.csv_rows())


def convergence_report(
    density: SpectralDensity,
    M: int,
    band: tuple[float, float],
    lambdas: Sequence[float],
    t: float,
    reference: float,
    *,
    omega_r: float | None = None,
    strength: float = 1.0,
    gamma: complex | None = None,
    settings: Settings | None = None,
) -> ConvergenceTable:
    """Second-order values along a decreasing lambda sequence.

    Args:
        density: Reservoir spectral density.
        M: Mode count of the discretization.
        band: Discretization band; must contain ``reference``.
        lambdas: Strictly decreasing couplings in (0, 1].
        t: Macroscopic time.
        reference: Resonance frequency omega_ref.
        omega_r: Counter-rotating frequency, default ``reference``.
        strength: Counter-rotating prefactor.
        gamma: Gamma_- to compare against; computed from ``density`` when omitted.
        settings: Process settings (thread count).

    Raises:
        ValidationError: If lambdas are not strictly decreasing.
        BandTooNarrowError: If the resonance lies outside the band.
    """
    lams = [float(x) for x in lambdas]
    if not lams or any(b >= a for a, b in zip(lams, lams[1:])):
        raise ValidationError(
            "lambda sequence must be non-empty and strictly decreasing", field="lambda"
        )
    settings = settings or get_settings()
    if gamma is None:
        gamma = gamma_minus(density, Detuning(1, reference), settings=settings).value
    predicted = -gamma
    res = discretize(density, M, band, reference)

    def row(lam: float) -> ConvergenceRow:
        value = second_order_term("rotating", res, reference, lam, t) / t
        cr = second_order_term(
            "counter_rotating", res, reference, lam, t, omega_r=omega_r, strength=strength
        )
        return ConvergenceRow(
            lam=lam,
            value=value,
            predicted=predicted,
            abs_error=abs(value - predicted),
            counter_rotating=abs(cr),
        )

    with ThreadPoolExecutor(max_workers=settings.threads) as pool:
        rows = tuple(pool.map(row, lams))

    refined = discretize(density, 2 * M, band, reference)
    lam_min = lams[-1]
    floor = abs(
        second_order_term("rotating", refined, reference, lam_min, t)
        - second_order_term("rotating", res, reference, lam_min, t)
    ) / t
    monotone = all(
        later.abs_error < earlier.abs_error or later.abs_error <= floor
        for earlier, later in zip(rows, rows[1:])
    )
    if not monotone:
        logger.warning("Second-order error is not monotone along lambda = %s", lams)
    for r in rows:
        logger.info(
            "lambda=%g |I/t + Gamma|=%.3e |I_cr|=%.3e", r.lam, r.abs_error, r.counter_rotating
        )
    return ConvergenceTable(rows=rows, t=t, gamma=complex(gamma), floor=floor, monotone=monotone)
