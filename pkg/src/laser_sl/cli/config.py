"""Run configuration: one TOML file validated into :class:`RunConfig`.

The grammar is documented in ``docs/config.md``. Relative file references (tabulated
densities) resolve against the directory of the configuration file.
"""

from __future__ import annotations

import logging
import sys
from enum import Enum
from pathlib import Path
from typing import Any, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from laser_sl.core.exceptions import ConfigParseError
from laser_sl.generators.params import ASParams, DHLParams, HLParams
from laser_sl.operators.space import HilbertSpec, SiteKind
from laser_sl.reservoir.density import SpectralDensity, TabulatedDensity
from laser_sl.reservoir.gamma import ExponentConvention, GammaMethod
from laser_sl.reservoir.gamma_sets import ModelKind

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover
    import tomli as tomllib

logger = logging.getLogger(__name__)


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class GammaSource(str, Enum):
    """Where the Gamma coefficients of an SL model come from."""

    DENSITIES = "densities"
    EXPLICIT = "explicit"
    MATCH = "match"


ComplexPair = tuple[float, float]


class UnitsSection(_Section):
    reference_rate: str = Field(min_length=1, description="Rate all quantities are measured in")


class ModelSection(_Section):
    kind: ModelKind


class FieldSection(_Section):
    N: int = Field(default=0, ge=0)
    n: int = Field(default=1, ge=1)
    cutoff: int = Field(default=3, ge=1)
    lambdas: tuple[float, ...]

    @model_validator(mode="after")
    def check_lambdas(self) -> FieldSection:
        if len(self.lambdas) != self.n:
            raise ValueError(f"field.lambdas has {len(self.lambdas)} entries, n = {self.n}")
        return self


class ASSection(_Section):
    epsilon: float
    gamma1: float
    gamma2: float
    eta: float
    omega: tuple[float, ...]
    kappa: tuple[float, ...]


class HLExplicit(_Section):
    radiation: tuple[ComplexPair, ...]
    h1: ComplexPair
    h2: ComplexPair


class HLSection(_Section):
    omega_r: float
    mu: float
    beta: float = Field(default=0.0, ge=0.0)
    gammas: GammaSource = GammaSource.DENSITIES
    imag_sum: float = 0.0
    radiation: tuple[str, ...] = ()
    h1: str | None = None
    h2: str | None = None
    explicit: HLExplicit | None = None


class DHLExplicit(_Section):
    radiation: tuple[ComplexPair, ...]
    b_plus: ComplexPair
    b_minus: ComplexPair
    c_plus: ComplexPair
    c_minus: ComplexPair


class DHLSection(_Section):
    omega_r: float
    mu: float
    gammas: GammaSource = GammaSource.DENSITIES
    radiation: tuple[str, ...] = ()
    b_plus: str | None = None
    b_minus: str | None = None
    c_plus: str | None = None
    c_minus: str | None = None
    explicit: DHLExplicit | None = None

    @field_validator("gammas")
    @classmethod
    def no_match_source(cls, v: GammaSource) -> GammaSource:
        if v is GammaSource.MATCH:
            raise ValueError("dhl.gammas = 'match' is not available; use densities or explicit")
        return v


class TimeGrid(_Section):
    start: float = 0.0
    stop: float
    points: int = Field(ge=2)

    def values(self) -> list[float]:
        return [float(x) for x in np.linspace(self.start, self.stop, self.points)]


class RunSection(_Section):
    """Subcommand options; each subcommand reads the keys it needs."""

    # gamma
    eps: tuple[float, ...] | None = None
    method: GammaMethod = "auto"
    convention: ExponentConvention = ExponentConvention.CANONICAL
    # build
    picture: Literal["heisenberg", "schrodinger"] = "heisenberg"
    export_matrix: bool = False
    single_reservoir: bool = False
    # match
    tolerance: float = Field(default=1e-12, gt=0.0)
    strict: bool = False
    # compare
    compare_with: ModelKind | None = None
    # evolve
    t_grid: tuple[float, ...] | TimeGrid | None = None
    tol: float = Field(default=1e-10, gt=0.0)
    initial_state: Literal["down", "up", "mixed"] = "down"
    observables: tuple[str, ...] = ("sz[0]",)
    evolve_picture: Literal["heisenberg", "schrodinger"] = "schrodinger"
    # sl-check
    density: str | None = None
    M: int = Field(default=400, ge=2)
    band: tuple[float, float] | None = None
    lambdas: tuple[float, ...] = (1.0, 0.5, 0.25, 0.125)
    t: float = Field(default=2.0, gt=0.0)
    reference: float | None = None

    def times(self) -> list[float]:
        if self.t_grid is None:
            raise ValueError("run.t_grid is required")
        if isinstance(self.t_grid, TimeGrid):
            return self.t_grid.values()
        return list(self.t_grid)


class RunConfig(_Section):
    """Validated contents of one configuration file.

    Example:
        >>> config = load_config("configs/hl_vs_as.toml")
        >>> config.model.kind
        <ModelKind.HL: 'HL'>
    """

    units: UnitsSection
    model: ModelSection
    field: FieldSection
    as_params: ASSection | None = None
    hl: HLSection | None = None
    dhl: DHLSection | None = None
    densities: dict[str, SpectralDensity] = Field(default_factory=dict)
    run: RunSection = Field(default_factory=RunSection)

    @model_validator(mode="after")
    def check_consistency(self) -> RunConfig:
        n = self.field.n
        if self.as_params is not None:
            for name in ("omega", "kappa"):
                size = len(getattr(self.as_params, name))
                if size != n:
                    raise ValueError(f"as_params.{name} has {size} entries, field.n = {n}")
        kinds = {self.model.kind}
        if self.run.compare_with is not None:
            kinds.add(self.run.compare_with)
        if ModelKind.AS in kinds and self.as_params is None:
            raise ValueError("model AS needs an [as_params] section")
        if ModelKind.HL in kinds:
            self._check_hl(n)
        if ModelKind.DHL in kinds:
            self._check_dhl(n)
        if self.run.density is not None:
            self._resolve(self.run.density, "run.density")
        return self

    def _resolve(self, name: str | None, where: str) -> None:
        if name is None:
            raise ValueError(f"{where} is required")
        if name not in self.densities:
            raise ValueError(f"{where} = {name!r} does not name a [densities] entry")

    def _check_radiation(self, names: tuple[str, ...], n: int, where: str) -> None:
        if len(names) != n:
            raise ValueError(f"{where}.radiation has {len(names)} entries, field.n = {n}")
        for name in names:
            self._resolve(name, f"{where}.radiation")

    def _check_hl(self, n: int) -> None:
        hl = self.hl
        if hl is None:
            raise ValueError("model HL needs an [hl] section")
        if hl.gammas is GammaSource.DENSITIES:
            self._check_radiation(hl.radiation, n, "hl")
            self._resolve(hl.h1, "hl.h1")
            self._resolve(hl.h2, "hl.h2")
        elif hl.gammas is GammaSource.EXPLICIT:
            if hl.explicit is None:
                raise ValueError("hl.gammas = 'explicit' needs an [hl.explicit] table")
            if len(hl.explicit.radiation) != n:
                raise ValueError(f"hl.explicit.radiation needs {n} entries")
        elif self.as_params is None:
            raise ValueError("hl.gammas = 'match' needs an [as_params] section")

    def _check_dhl(self, n: int) -> None:
        dhl = self.dhl
        if dhl is None:
            raise ValueError("model DHL needs a [dhl] section")
        if dhl.gammas is GammaSource.DENSITIES:
            self._check_radiation(dhl.radiation, n, "dhl")
            for key in ("b_plus", "b_minus", "c_plus", "c_minus"):
                self._resolve(getattr(dhl, key), f"dhl.{key}")
        else:
            if dhl.explicit is None:
                raise ValueError("dhl.gammas = 'explicit' needs a [dhl.explicit] table")
            if len(dhl.explicit.radiation) != n:
                raise ValueError(f"dhl.explicit.radiation needs {n} entries")

    # === Derived objects ===

    def space_spec(self, kind: ModelKind | None = None) -> HilbertSpec:
        kind = kind or self.model.kind
        matter = SiteKind.FERMION_PAIR if kind is ModelKind.DHL else SiteKind.SPIN
        return HilbertSpec.laser(
            n_atoms=2 * self.field.N + 1,
            n_modes=self.field.n,
            cutoff=self.field.cutoff,
            matter=matter,
        )

    def as_model(self) -> ASParams:
        if self.as_params is None:
            raise ValueError("no [as_params] section")
        return ASParams(N=self.field.N, lambdas=self.field.lambdas, **self.as_params.model_dump())

    def hl_model(self) -> HLParams:
        if self.hl is None:
            raise ValueError("no [hl] section")
        return HLParams(
            omega_r=self.hl.omega_r,
            mu=self.hl.mu,
            beta=self.hl.beta,
            lambdas=self.field.lambdas,
        )

    def dhl_model(self) -> DHLParams:
        if self.dhl is None:
            raise ValueError("no [dhl] section")
        return DHLParams(omega_r=self.dhl.omega_r, mu=self.dhl.mu, lambdas=self.field.lambdas)


def _inline_tabulated(densities: Any, base: Path) -> None:
    """Replace ``file = ...`` in tabulated densities by the loaded samples."""
    if not isinstance(densities, dict):
        return
    for entry in densities.values():
        if not isinstance(entry, dict):
            continue
        if entry.get("form") == "tabulated" and "file" in entry:
            path = base / str(entry.pop("file"))
            try:
                table = TabulatedDensity.from_file(path)
            except (OSError, ValueError) as exc:
                raise ConfigParseError(str(path), str(exc)) from exc
            entry["omega"] = list(table.omega)
            entry["values"] = list(table.values)
        if entry.get("form") == "sum":
            nested = {str(i): term.get("density") for i, term in enumerate(entry.get("terms", []))}
            _inline_tabulated(nested, base)


def parse_config(text: str, base: Path, source: str = "<string>") -> RunConfig:
    """Parse TOML text into a RunConfig.

    Raises:
        ConfigParseError: If the text is not valid TOML.
        pydantic.ValidationError: If the contents violate the schema.
    """
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigParseError(source, str(exc)) from exc
    _inline_tabulated(data.get("densities"), base)
    return RunConfig.model_validate(data)


def load_config(path: str | Path) -> RunConfig:
    """Read and validate a configuration file.

    Raises:
        ConfigParseError: If the file cannot be read or parsed.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigParseError(str(path), exc.strerror or str(exc)) from exc
    config = parse_config(text, path.parent, str(path))
    logger.info("Loaded %s (model %s)", path, config.model.kind.value)
    return config
