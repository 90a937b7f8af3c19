"""Core infrastructure for laser-sl."""

from laser_sl.core.exceptions import (
    EXIT_NUMERICAL,
    EXIT_VALIDATION,
    BandTooNarrowError,
    ConfigParseError,
    DecompositionFailure,
    DegenerateKernelError,
    DegeneratePumpError,
    DimensionCapError,
    HermiticityError,
    LaserSLError,
    MonitorBreach,
    NoExactMatch,
    NoResonanceInSupport,
    NumericalError,
    OrderViolation,
    ParamInvariantViolation,
    ParamMismatchError,
    PictureMismatchError,
    QuadratureDivergence,
    ResonanceViolation,
    SiteMismatchError,
    SpaceMismatchError,
    StepSizeUnderflow,
    UnbalancedError,
    ValidationError,
)
from laser_sl.core.settings import Settings, get_settings

__all__ = [
    # Settings
    "Settings",
    "get_settings",
    # Exit codes
    "EXIT_NUMERICAL",
    "EXIT_VALIDATION",
    # Exceptions
    "BandTooNarrowError",
    "ConfigParseError",
    "DecompositionFailure",
    "DegenerateKernelError",
    "DegeneratePumpError",
    "DimensionCapError",
    "HermiticityError",
    "LaserSLError",
    "MonitorBreach",
    "NoExactMatch",
    "NoResonanceInSupport",
    "NumericalError",
    "OrderViolation",
    "ParamInvariantViolation",
    "ParamMismatchError",
    "PictureMismatchError",
    "QuadratureDivergence",
    "ResonanceViolation",
    "SiteMismatchError",
    "SpaceMismatchError",
    "StepSizeUnderflow",
    "UnbalancedError",
    "ValidationError",
]
