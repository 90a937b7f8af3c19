"""Parameter models of the AS, HL and DHL laser models."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from laser_sl.core.exceptions import ParamInvariantViolation, ParamMismatchError
from laser_sl.reservoir.gamma_sets import check_resonance


PHYSICAL_BOUNDS = "0 < gamma2 <= 2*gamma1, -1 <= eta <= 1"


class ASParams(BaseModel):
    """Parameters of the dissipative AS generator.

    Lengths of ``omega``, ``kappa`` and ``lambdas`` must agree; the physical bounds
    (0 < gamma2 <= 2 gamma1, -1 <= eta <= 1, omega_l > 0, kappa_l > 0) are checked by
    :meth:`check_bounds`, so matching reports can hold projected values too.

    Example:
        >>> p = ASParams(N=0, epsilon=0.5, gamma1=1.0, gamma2=2.0, eta=0.5,
        ...              omega=(5.0,), kappa=(0.3,), lambdas=(0.0,))
        >>> p.check_bounds().n
        1
    """

    model_config = ConfigDict(frozen=True)

    N: int = Field(ge=0, description="Half-chain size; 2N+1 atoms")
    epsilon: float = Field(description="Atomic energy gap")
    gamma1: float
    gamma2: float
    eta: float = Field(description="Pump parameter")
    omega: tuple[float, ...] = Field(min_length=1)
    kappa: tuple[float, ...] = Field(min_length=1)
    lambdas: tuple[float, ...] = Field(min_length=1)

    @model_validator(mode="after")
    def check_lengths(self) -> ASParams:
        n = len(self.omega)
        if len(self.kappa) != n:
            raise ParamMismatchError("kappa", n, len(self.kappa))
        if len(self.lambdas) != n:
            raise ParamMismatchError("lambdas", n, len(self.lambdas))
        return self

    @property
    def n(self) -> int:
        return len(self.omega)

    def check_bounds(self) -> ASParams:
        """Raise ParamInvariantViolation unless every physical bound holds."""
        if self.epsilon <= 0:
            raise ParamInvariantViolation("epsilon must be > 0", field="epsilon")
        if self.gamma1 <= 0:
            raise ParamInvariantViolation(
                f"gamma1 must be > 0 (physical bounds: {PHYSICAL_BOUNDS})", field="gamma1"
            )
        if not 0 < self.gamma2 <= 2 * self.gamma1:
            raise ParamInvariantViolation(
                f"gamma2 must satisfy 0 < gamma2 <= 2*gamma1 (gamma1={self.gamma1}, "
                f"gamma2={self.gamma2})",
                field="gamma2",
            )
        if not -1.0 <= self.eta <= 1.0:
            raise ParamInvariantViolation(
                f"eta must satisfy -1 <= eta <= 1, got {self.eta}", field="eta"
            )
        if any(w <= 0 for w in self.omega):
            raise ParamInvariantViolation("every omega_l must be > 0", field="omega")
        if any(k <= 0 for k in self.kappa):
            raise ParamInvariantViolation("every kappa_l must be > 0", field="kappa")
        return self

    def with_updates(self, **changes: object) -> ASParams:
        return self.model_validate({**self.model_dump(), **changes})


class HLParams(BaseModel):
    """Hamiltonian parameters of the HL model.

    ``beta`` scales the counter-rotating term; it only enters the second-order oracle.
    """

    model_config = ConfigDict(frozen=True)

    omega_r: float
    mu: float
    beta: float = Field(default=0.0, ge=0.0)
    lambdas: tuple[float, ...] = Field(min_length=1)

    def check_resonance(self) -> HLParams:
        check_resonance(self.omega_r, self.mu)
        return self


class DHLParams(BaseModel):
    """Hamiltonian parameters of the DHL model."""

    model_config = ConfigDict(frozen=True)

    omega_r: float
    mu: float
    lambdas: tuple[float, ...] = Field(min_length=1)

    def check_resonance(self) -> DHLParams:
        check_resonance(self.omega_r, self.mu)
        return self
