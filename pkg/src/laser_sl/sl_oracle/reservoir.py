"""Finite-mode reservoirs obtained by midpoint discretization of a density."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from laser_sl.core.exceptions import BandTooNarrowError, ValidationError
from laser_sl.reservoir.density import SpectralDensity

logger = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class DiscreteReservoir:
    """Modes omega_k with real couplings g_k, g_k^2 = J(omega_k) * h.

    Attributes:
        omega: Strictly increasing mode frequencies (cell midpoints).
        g: Real couplings.
        band: (omega_min, omega_max) covered by the cells.
    """

    omega: FloatArray
    g: FloatArray
    band: tuple[float, float]

    @property
    def M(self) -> int:
        return int(self.omega.size)

    @property
    def total_weight(self) -> float:
        """sum_k g_k^2, which approximates the integral of J over the band."""
        return float(np.sum(self.g**2))

    @classmethod
    def single_mode(cls, omega: float, g: float) -> DiscreteReservoir:
        """One isolated mode: no continuum, so no stochastic limit."""
        return cls(omega=np.array([omega]), g=np.array([g]), band=(omega, omega))


def discretize(
    density: SpectralDensity,
    M: int,
    band: tuple[float, float],
    reference: float | None = None,
) -> DiscreteReservoir:
    """Midpoint discretization of J on ``band`` with M cells.

    Args:
        density: Spectral density J.
        M: Number of modes, at least 2.
        band: (omega_min, omega_max).
        reference: Resonance frequency; must lie inside the band when given.

    Raises:
        ValidationError: If M < 2 or the band is empty.
        BandTooNarrowError: If the resonance lies outside the band.
    """
    lo, hi = float(band[0]), float(band[1])
    if M < 2:
        raise ValidationError(f"M must be >= 2, got {M}", field="M")
    if not hi > lo:
        raise ValidationError(f"band must satisfy min < max, got {band}", field="band")
    if reference is not None and not lo < reference < hi:
        raise BandTooNarrowError(reference, (lo, hi))
    h = (hi - lo) / M
    omega = lo + (np.arange(M, dtype=np.float64) + 0.5) * h
    g = np.sqrt(np.clip(density.evaluate(omega), 0.0, None) * h)
    logger.debug("Discretized J on [%g, %g] with M=%d, sum g^2=%.6g", lo, hi, M, float(g @ g))
    return DiscreteReservoir(omega=omega, g=g, band=(lo, hi))
