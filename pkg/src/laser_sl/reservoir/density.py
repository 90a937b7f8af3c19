"""Reservoir spectral densities J(omega) with dispersion and form factor folded in."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Annotated, Literal

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, model_validator

FloatArray = npt.NDArray[np.float64]


class _Density(BaseModel):
    model_config = ConfigDict(frozen=True)

    def evaluate(self, omega: npt.ArrayLike) -> FloatArray:
        """J at the given frequencies; zero outside the support."""
        raise NotImplementedError

    def __call__(self, omega: float) -> float:
        return float(self.evaluate(np.asarray([omega], dtype=np.float64))[0])


def _inside(omega: FloatArray, support: tuple[float, float]) -> npt.NDArray[np.bool_]:
    lo, hi = support
    return (omega >= lo) & (omega <= hi)


class FlatDensity(_Density):
    """Constant J0 on [center - half_width, center + half_width]."""

    form: Literal["flat"] = "flat"
    j0: float = Field(ge=0.0)
    center: float
    half_width: float = Field(gt=0.0)

    def evaluate(self, omega: npt.ArrayLike) -> FloatArray:
        w = np.asarray(omega, dtype=np.float64)
        return np.where(_inside(w, self.support), self.j0, 0.0)

    @property
    def support(self) -> tuple[float, float]:
        return (self.center - self.half_width, self.center + self.half_width)

    @property
    def scale(self) -> float:
        return self.half_width

    @property
    def breakpoints(self) -> tuple[float, ...]:
        return self.support


class LorentzianDensity(_Density):
    """J0 w^2 / ((omega - c)^2 + w^2); whole real line unless ``cutoff`` is set."""

    form: Literal["lorentzian"] = "lorentzian"
    j0: float = Field(ge=0.0)
    center: float
    width: float = Field(gt=0.0)
    cutoff: float | None = Field(default=None, gt=0.0, description="Support half-width")

    def evaluate(self, omega: npt.ArrayLike) -> FloatArray:
        w = np.asarray(omega, dtype=np.float64)
        values = self.j0 * self.width**2 / ((w - self.center) ** 2 + self.width**2)
        return np.where(_inside(w, self.support), values, 0.0)

    @property
    def support(self) -> tuple[float, float]:
        if self.cutoff is None:
            return (-math.inf, math.inf)
        return (self.center - self.cutoff, self.center + self.cutoff)

    @property
    def scale(self) -> float:
        return self.width

    @property
    def breakpoints(self) -> tuple[float, ...]:
        return () if self.cutoff is None else self.support


class GaussianDensity(_Density):
    """J0 exp(-(omega - c)^2 / (2 sigma^2)); whole real line unless ``cutoff`` is set."""

    form: Literal["gaussian"] = "gaussian"
    j0: float = Field(ge=0.0)
    center: float
    sigma: float = Field(gt=0.0)
    cutoff: float | None = Field(default=None, gt=0.0)

    def evaluate(self, omega: npt.ArrayLike) -> FloatArray:
        w = np.asarray(omega, dtype=np.float64)
        values = self.j0 * np.exp(-((w - self.center) ** 2) / (2.0 * self.sigma**2))
        return np.where(_inside(w, self.support), values, 0.0)

    @property
    def support(self) -> tuple[float, float]:
        if self.cutoff is None:
            return (-math.inf, math.inf)
        return (self.center - self.cutoff, self.center + self.cutoff)

    @property
    def scale(self) -> float:
        return self.sigma

    @property
    def breakpoints(self) -> tuple[float, ...]:
        return () if self.cutoff is None else self.support


class TabulatedDensity(_Density):
    """Piecewise-linear interpolation of (omega, J) samples."""

    form: Literal["tabulated"] = "tabulated"
    omega: tuple[float, ...]
    values: tuple[float, ...]

    @model_validator(mode="after")
    def check_grid(self) -> TabulatedDensity:
        if len(self.omega) < 2 or len(self.omega) != len(self.values):
            raise ValueError("need at least two (omega, J) samples of equal length")
        if any(b <= a for a, b in zip(self.omega, self.omega[1:])):
            raise ValueError("omega grid must be strictly increasing")
        if any(v < 0 for v in self.values):
            raise ValueError("J must be nonnegative")
        return self

    @classmethod
    def from_file(cls, path: str | Path) -> TabulatedDensity:
        """Load a two-column text file (omega, J)."""
        data = np.loadtxt(path, dtype=np.float64, ndmin=2)
        if data.shape[1] != 2:
            raise ValueError(f"{path}: expected two columns, got {data.shape[1]}")
        return cls(omega=tuple(data[:, 0].tolist()), values=tuple(data[:, 1].tolist()))

    def evaluate(self, omega: npt.ArrayLike) -> FloatArray:
        w = np.asarray(omega, dtype=np.float64)
        values = np.interp(w, self.omega, self.values)
        return np.where(_inside(w, self.support), values, 0.0)

    @property
    def support(self) -> tuple[float, float]:
        return (self.omega[0], self.omega[-1])

    @property
    def center(self) -> float:
        return 0.5 * (self.omega[0] + self.omega[-1])

    @property
    def scale(self) -> float:
        return 0.5 * (self.omega[-1] - self.omega[0])

    @property
    def breakpoints(self) -> tuple[float, ...]:
        return self.omega


class WeightedTerm(BaseModel):
    model_config = ConfigDict(frozen=True)

    weight: float = Field(ge=0.0)
    density: SpectralDensity


class SumDensity(_Density):
    """Nonnegative weighted sum of densities."""

    form: Literal["sum"] = "sum"
    terms: tuple[WeightedTerm, ...] = Field(min_length=1)

    def evaluate(self, omega: npt.ArrayLike) -> FloatArray:
        w = np.asarray(omega, dtype=np.float64)
        result = np.zeros_like(w)
        for term in self.terms:
            result = result + term.weight * term.density.evaluate(w)
        return result

    @property
    def support(self) -> tuple[float, float]:
        supports = [t.density.support for t in self.terms]
        return (min(s[0] for s in supports), max(s[1] for s in supports))

    @property
    def center(self) -> float:
        return sum(t.density.center for t in self.terms) / len(self.terms)

    @property
    def scale(self) -> float:
        return min(t.density.scale for t in self.terms)

    @property
    def breakpoints(self) -> tuple[float, ...]:
        points = {p for t in self.terms for p in t.density.breakpoints}
        return tuple(sorted(points))


SpectralDensity = Annotated[
    FlatDensity | LorentzianDensity | GaussianDensity | TabulatedDensity | SumDensity,
    Field(discriminator="form"),
]

WeightedTerm.model_rebuild()
SumDensity.model_rebuild()


def zero_density(center: float = 0.0) -> FlatDensity:
    """J = 0, handy for switched-off channels."""
    return FlatDensity(j0=0.0, center=center, half_width=1.0)
