"""Gamma sets: every reservoir coefficient of one stochastic-limit model."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from laser_sl.core.exceptions import ParamMismatchError, ResonanceViolation
from laser_sl.core.settings import Settings, get_settings
from laser_sl.reservoir.density import SpectralDensity
from laser_sl.reservoir.gamma import (
    DEFAULT_EPS,
    Detuning,
    ExponentConvention,
    GammaCoefficient,
    GammaMethod,
    gamma_minus,
)

logger = logging.getLogger(__name__)

HL_CHANNELS: tuple[str, ...] = ("h1", "h2")
DHL_CHANNELS: tuple[str, ...] = ("B+", "B-", "C+", "C-")

RESONANCE_TOLERANCE = 1e-9


class ModelKind(str, Enum):
    """The three laser models."""

    AS = "AS"
    HL = "HL"
    DHL = "DHL"


@dataclass(frozen=True, eq=False)
class GammaSet:
    """Gamma_- coefficients of one model.

    Attributes:
        model: HL or DHL.
        radiation: Gamma^(g)_j per boson mode j.
        matter: Matter channels, keys ``h1, h2`` (HL) or ``B+, B-, C+, C-`` (DHL).
        coefficients: Full coefficient reports keyed ``g0.., h1, ...`` when computed
            from densities.

    Example:
        >>> g = GammaSet.hl(radiation=[0.3 + 5j], h1=0.25 + 0.25j, h2=0.75 - 0.25j)
        >>> g["g0"]
        (0.3+5j)
    """

    model: ModelKind
    radiation: tuple[complex, ...]
    matter: dict[str, complex]
    coefficients: dict[str, GammaCoefficient] = field(default_factory=dict)

    def __post_init__(self) -> None:
        expected = {ModelKind.HL: HL_CHANNELS, ModelKind.DHL: DHL_CHANNELS}.get(self.model)
        if expected is None:
            raise ValueError(f"GammaSet model must be HL or DHL, got {self.model.value}")
        if tuple(self.matter) != expected:
            raise ParamMismatchError("matter channels", len(expected), len(self.matter))

    @classmethod
    def hl(cls, radiation: Sequence[complex], h1: complex, h2: complex) -> GammaSet:
        return cls(
            model=ModelKind.HL,
            radiation=tuple(complex(g) for g in radiation),
            matter={"h1": complex(h1), "h2": complex(h2)},
        )

    @classmethod
    def dhl(
        cls,
        radiation: Sequence[complex],
        b_plus: complex,
        b_minus: complex,
        c_plus: complex,
        c_minus: complex,
    ) -> GammaSet:
        return cls(
            model=ModelKind.DHL,
            radiation=tuple(complex(g) for g in radiation),
            matter={
                "B+": complex(b_plus),
                "B-": complex(b_minus),
                "C+": complex(c_plus),
                "C-": complex(c_minus),
            },
        )

    @property
    def n(self) -> int:
        return len(self.radiation)

    def names(self) -> list[str]:
        return [f"g{j}" for j in range(self.n)] + list(self.matter)

    def __getitem__(self, name: str) -> complex:
        if name.startswith("g") and name[1:].isdigit():
            return self.radiation[int(name[1:])]
        return self.matter[name]


@dataclass(frozen=True)
class HLDensities:
    """Densities of the HL reservoirs: radiation g_j plus matter h1, h2."""

    radiation: tuple[SpectralDensity, ...]
    h1: SpectralDensity
    h2: SpectralDensity


@dataclass(frozen=True)
class DHLDensities:
    """Densities of the DHL reservoirs: radiation g_j plus fermionic B+-, C+-."""

    radiation: tuple[SpectralDensity, ...]
    b_plus: SpectralDensity
    b_minus: SpectralDensity
    c_plus: SpectralDensity
    c_minus: SpectralDensity


def check_resonance(omega_r: float, mu: float, tolerance: float = RESONANCE_TOLERANCE) -> None:
    """Require omega_R = 2 mu so the free evolution cancels in the interaction picture."""
    if abs(omega_r - 2.0 * mu) > tolerance * max(1.0, abs(omega_r)):
        raise ResonanceViolation(omega_r, mu, tolerance)


def _compute(
    model: ModelKind,
    jobs: list[tuple[str, SpectralDensity, Detuning]],
    n: int,
    eps_seq: Sequence[float],
    method: GammaMethod,
    convention: ExponentConvention,
    settings: Settings,
) -> GammaSet:
    def run(job: tuple[str, SpectralDensity, Detuning]) -> GammaCoefficient:
        _, density, detuning = job
        return gamma_minus(
            density, detuning, eps_seq, method=method, convention=convention, settings=settings
        )

    with ThreadPoolExecutor(max_workers=settings.threads) as pool:
        results = list(pool.map(run, jobs))
    coefficients = {name: coef for (name, _, _), coef in zip(jobs, results)}
    for name, coef in coefficients.items():
        logger.info("Gamma[%s] = %.10g%+.10gi", name, coef.value.real, coef.value.imag)
    radiation_names = [f"g{j}" for j in range(n)]
    radiation = tuple(coefficients[name].value for name in radiation_names)
    matter = {
        name: coef.value for name, coef in coefficients.items() if name not in radiation_names
    }
    return GammaSet(model=model, radiation=radiation, matter=matter, coefficients=coefficients)


def gamma_set_hl(
    densities: HLDensities,
    omega_r: float,
    mu: float,
    *,
    eps_seq: Sequence[float] = DEFAULT_EPS,
    method: GammaMethod = "auto",
    convention: ExponentConvention = ExponentConvention.CANONICAL,
    settings: Settings | None = None,
) -> GammaSet:
    """Gamma coefficients of the HL stochastic limit.

    Detunings: g_j and h1 use Delta = w - omega_R, h2 uses Delta = w + omega_R.

    Raises:
        ResonanceViolation: If omega_R != 2 mu.
    """
    check_resonance(omega_r, mu)
    settings = settings or get_settings()
    jobs = [(f"g{j}", d, Detuning(1, omega_r)) for j, d in enumerate(densities.radiation)]
    jobs.append(("h1", densities.h1, Detuning(1, omega_r)))
    jobs.append(("h2", densities.h2, Detuning(1, -omega_r)))
    return _compute(
        ModelKind.HL, jobs, len(densities.radiation), eps_seq, method, convention, settings
    )


def gamma_set_dhl(
    densities: DHLDensities,
    omega_r: float,
    mu: float,
    *,
    eps_seq: Sequence[float] = DEFAULT_EPS,
    method: GammaMethod = "auto",
    convention: ExponentConvention = ExponentConvention.CANONICAL,
    settings: Settings | None = None,
) -> GammaSet:
    """Gamma coefficients of the DHL stochastic limit.

    Detunings: g_j uses w - omega_R; B+- use e -+ mu; C+- use -(e -+ mu).

    Raises:
        ResonanceViolation: If omega_R != 2 mu.
    """
    check_resonance(omega_r, mu)
    settings = settings or get_settings()
    jobs = [(f"g{j}", d, Detuning(1, omega_r)) for j, d in enumerate(densities.radiation)]
    jobs += [
        ("B+", densities.b_plus, Detuning(1, mu)),
        ("B-", densities.b_minus, Detuning(1, -mu)),
        ("C+", densities.c_plus, Detuning(-1, mu)),
        ("C-", densities.c_minus, Detuning(-1, -mu)),
    ]
    return _compute(
        ModelKind.DHL, jobs, len(densities.radiation), eps_seq, method, convention, settings
    )
