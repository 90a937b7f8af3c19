"""Expectation-value trajectories with conservation monitors."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import TextIO

import numpy as np
import numpy.typing as npt

from laser_sl.core.io import csv_text, write_csv

FloatArray = npt.NDArray[np.float64]
ComplexArray = npt.NDArray[np.complex128]

MONITOR_COLUMNS = ("trace_dev", "herm_dev", "min_eig")


@dataclass
class Trajectory:
    """Observable expectations on a time grid.

    Attributes:
        times: Strictly increasing output times.
        names: Observable names, one column pair each in the CSV.
        values: Complex expectations, shape (len(times), len(names)).
        trace_dev: |tr rho(t) - 1| per output time.
        herm_dev: max|rho - rho^dag| per output time.
        min_eig: Smallest eigenvalue of rho(t) per output time.
        stats: Integrator counters (steps, rejections, evaluations).
    """

    times: FloatArray
    names: list[str]
    values: ComplexArray
    trace_dev: FloatArray
    herm_dev: FloatArray
    min_eig: FloatArray
    stats: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.values.shape != (len(self.times), len(self.names)):
            raise ValueError(
                f"values shape {self.values.shape} does not match "
                f"({len(self.times)}, {len(self.names)})"
            )

    def __getitem__(self, name: str) -> ComplexArray:
        return np.asarray(self.values[:, self.names.index(name)])

    @property
    def header(self) -> list[str]:
        columns = ["t"]
        for name in self.names:
            columns += [f"{name}.re", f"{name}.im"]
        return columns + list(MONITOR_COLUMNS)

    def rows(self) -> list[list[float]]:
        out = []
        for k, t in enumerate(self.times):
            row = [float(t)]
            for value in self.values[k]:
                row += [float(value.real), float(value.imag)]
            row += [float(self.trace_dev[k]), float(self.herm_dev[k]), float(self.min_eig[k])]
            out.append(row)
        return out

    def to_csv(self, target: str | Path | TextIO) -> None:
        """``t,<name>.re,<name>.im,...,trace_dev,herm_dev,min_eig`` at 17 significant digits."""
        write_csv(self.header, self.rows(), target)

    def csv(self) -> str:
        return csv_text(self.header, self.rows())
