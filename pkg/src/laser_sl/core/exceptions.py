"""Custom exception hierarchy for laser-sl.

Provides structured error handling with proper categorization for:
- Configuration and validation errors (exit code 2)
- Operator algebra and space errors
- Generator construction errors
- Numerical failures in quadrature, integration and decompositions (exit code 3)
- Report-level conditions that only raise in strict mode
"""

from __future__ import annotations

import logging
from typing import Any

logger = logging.getLogger(__name__)

EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3


class LaserSLError(Exception):
    """Base exception for all laser-sl errors.

    Attributes:
        message: Human-readable error message.
        code: Machine-readable error code.
        details: Additional error context.
    """

    def __init__(
        self,
        message: str,
        code: str = "LASER_SL_ERROR",
        details: dict[str, Any] | None = None,
    ) -> None:
        self.message = message
        self.code = code
        self.details = details or {}
        super().__init__(message)

    @property
    def exit_code(self) -> int:
        return EXIT_VALIDATION

    def to_dict(self) -> dict[str, Any]:
        """Convert exception to dictionary for structured reports."""
        return {
            "error": self.code,
            "message": self.message,
            "details": self.details,
        }

    def log(self, level: int = logging.ERROR, exc_info: bool = True) -> None:
        """Log the exception with context; pass ``exc_info=False`` outside an except block."""
        logger.log(
            level,
            "%s: %s",
            self.code,
            self.message,
            extra={"error_details": self.details},
            exc_info=exc_info,
        )


class NumericalError(LaserSLError):
    """Base for numerical failures: quadrature, integration, decompositions."""

    @property
    def exit_code(self) -> int:
        return EXIT_NUMERICAL


# === Configuration Errors ===


class ConfigParseError(LaserSLError):
    """Config file missing or not valid TOML."""

    def __init__(self, path: str, reason: str) -> None:
        super().__init__(
            f"Cannot read config {path}: {reason}",
            code="CONFIG_PARSE",
            details={"path": path},
        )


class ValidationError(LaserSLError):
    """Invalid input data (config values, states, parameter combinations)."""

    def __init__(
        self,
        message: str,
        field: str | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        details = details or {}
        if field:
            details["field"] = field
        super().__init__(message, code="VALIDATION_ERROR", details=details)


# === Operator Errors ===


class DimensionCapError(ValidationError):
    """Total Hilbert-space dimension exceeds the configured cap."""

    def __init__(self, dimension: int, cap: int) -> None:
        super().__init__(
            f"Space dimension {dimension} exceeds cap {cap}",
            details={"dimension": dimension, "cap": cap},
        )
        self.code = "DIMENSION_CAP"


class SiteMismatchError(ValidationError):
    """Operator requested on a site of the wrong kind or size."""

    def __init__(self, site: int, expected: str, actual: str) -> None:
        super().__init__(
            f"Site {site} is {actual}, expected {expected}",
            details={"site": site, "expected": expected, "actual": actual},
        )
        self.code = "SITE_MISMATCH"


class SpaceMismatchError(ValidationError):
    """Operands live on different spaces or the space has the wrong layout."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message, details=details)
        self.code = "SPACE_MISMATCH"


class ParamMismatchError(ValidationError):
    """Parameter list lengths disagree with the space."""

    def __init__(self, name: str, expected: int, actual: int) -> None:
        super().__init__(
            f"{name} has {actual} entries, expected {expected}",
            field=name,
            details={"expected": expected, "actual": actual},
        )
        self.code = "PARAM_MISMATCH"


class HermiticityError(ValidationError):
    """Operator flagged hermitian is not exactly hermitian."""

    def __init__(self, deviation: float) -> None:
        super().__init__(
            f"Operator flagged hermitian deviates from its adjoint by {deviation:.3e}",
            details={"deviation": deviation},
        )
        self.code = "HERMITICITY_VIOLATION"


# === Generator Errors ===


class ParamInvariantViolation(ValidationError):
    """Physical parameter outside its admissible range."""

    def __init__(self, message: str, field: str | None = None) -> None:
        super().__init__(message, field=field)
        self.code = "PARAM_INVARIANT"


class PictureMismatchError(ValidationError):
    """Superoperator is in the wrong picture for the requested operation."""

    def __init__(self, expected: str, actual: str) -> None:
        super().__init__(
            f"Expected a {expected} superoperator, got {actual}",
            details={"expected": expected, "actual": actual},
        )
        self.code = "PICTURE_MISMATCH"


class ResonanceViolation(ValidationError):
    """The resonance condition omega_R = 2 mu does not hold."""

    def __init__(self, omega_r: float, mu: float, tolerance: float) -> None:
        super().__init__(
            f"omega_R = {omega_r} differs from 2*mu = {2 * mu} beyond {tolerance:g}",
            details={"omega_r": omega_r, "mu": mu, "tolerance": tolerance},
        )
        self.code = "RESONANCE_VIOLATION"


class DecompositionFailure(NumericalError):
    """Generator does not admit a hermitian Kossakowski matrix."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message, code="DECOMPOSITION_FAILURE", details=details)


# === Reservoir Errors ===


class NoResonanceInSupport(LaserSLError):
    """Detuning has no root inside the density support (report-level)."""

    def __init__(self, reference: float, support: tuple[float, float]) -> None:
        super().__init__(
            f"No resonance at {reference} inside support [{support[0]}, {support[1]}]",
            code="NO_RESONANCE",
            details={"reference": reference, "support": list(support)},
        )


class QuadratureDivergence(NumericalError):
    """Adaptive quadrature exhausted its subdivision budget."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message, code="QUADRATURE_DIVERGENCE", details=details)


class BandTooNarrowError(ValidationError):
    """Resonance lies outside the discretization band."""

    def __init__(self, resonance: float, band: tuple[float, float]) -> None:
        super().__init__(
            f"Resonance {resonance} outside band [{band[0]}, {band[1]}]",
            details={"resonance": resonance, "band": list(band)},
        )
        self.code = "BAND_TOO_NARROW"


# === Matching Errors ===


class DegeneratePumpError(ValidationError):
    """Total matter damping vanishes, the pump parameter is undefined."""

    def __init__(self, total: float) -> None:
        super().__init__(
            f"Matter damping Re sum is {total:g}; pump parameter undefined",
            details={"total": total},
        )
        self.code = "DEGENERATE_PUMP"


class NoExactMatch(LaserSLError):
    """Parameters lie off the gamma2 = 2 gamma1 manifold (report-level)."""

    def __init__(self, residual: float) -> None:
        super().__init__(
            f"No exact stochastic-limit match; distance to gamma2 = 2*gamma1 is {residual:.6g}",
            code="NO_EXACT_MATCH",
            details={"residual": residual},
        )


class UnbalancedError(LaserSLError):
    """Fermionic pump/sink rates are not balanced between levels (report-level)."""

    def __init__(self, residual: float) -> None:
        super().__init__(
            f"Level balance violated by {residual:.6g}",
            code="UNBALANCED",
            details={"residual": residual},
        )


# === Dynamics Errors ===


class StepSizeUnderflow(NumericalError):
    """Integrator step size fell below machine resolution."""

    def __init__(self, t: float, message: str) -> None:
        super().__init__(
            f"Step size underflow at t = {t:g}: {message}",
            code="STEP_SIZE_UNDERFLOW",
            details={"t": t},
        )


class MonitorBreach(NumericalError):
    """Trace drift persisted beyond the allowed bound after step rejections."""

    def __init__(self, t: float, drift: float, bound: float) -> None:
        super().__init__(
            f"Trace drift {drift:.3e} exceeds {bound:.3e} at t = {t:g}",
            code="MONITOR_BREACH",
            details={"t": t, "drift": drift, "bound": bound},
        )


class DegenerateKernelError(NumericalError):
    """Generator kernel is not one-dimensional."""

    def __init__(self, dimension: int) -> None:
        super().__init__(
            f"Kernel dimension is {dimension}, expected 1",
            code="DEGENERATE_KERNEL",
            details={"dimension": dimension},
        )


# === Oracle Errors ===


class OrderViolation(ValidationError):
    """Time-consecutive check requires t > t'."""

    def __init__(self, t: float, t_prime: float) -> None:
        super().__init__(
            f"Need t > t', got t = {t:g}, t' = {t_prime:g}",
            details={"t": t, "t_prime": t_prime},
        )
        self.code = "ORDER_VIOLATION"
