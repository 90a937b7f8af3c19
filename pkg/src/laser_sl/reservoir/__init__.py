"""Reservoir spectral densities and Gamma_- coefficients."""

from laser_sl.reservoir.density import (
    FlatDensity,
    GaussianDensity,
    LorentzianDensity,
    SpectralDensity,
    SumDensity,
    TabulatedDensity,
    WeightedTerm,
    zero_density,
)
from laser_sl.reservoir.gamma import (
    DEFAULT_EPS,
    Detuning,
    ExponentConvention,
    GammaCoefficient,
    RegularizationReport,
    correlation_function,
    gamma_at_eps,
    gamma_closed_form,
    gamma_minus,
    gamma_minus_time_domain,
    richardson,
)
from laser_sl.reservoir.gamma_sets import (
    DHL_CHANNELS,
    HL_CHANNELS,
    DHLDensities,
    GammaSet,
    HLDensities,
    ModelKind,
    check_resonance,
    gamma_set_dhl,
    gamma_set_hl,
)

__all__ = [
    # Densities
    "FlatDensity",
    "GaussianDensity",
    "LorentzianDensity",
    "SpectralDensity",
    "SumDensity",
    "TabulatedDensity",
    "WeightedTerm",
    "zero_density",
    # Coefficients
    "DEFAULT_EPS",
    "Detuning",
    "ExponentConvention",
    "GammaCoefficient",
    "RegularizationReport",
    "correlation_function",
    "gamma_at_eps",
    "gamma_closed_form",
    "gamma_minus",
    "gamma_minus_time_domain",
    "richardson",
    # Gamma sets
    "DHL_CHANNELS",
    "HL_CHANNELS",
    "DHLDensities",
    "GammaSet",
    "HLDensities",
    "ModelKind",
    "check_resonance",
    "gamma_set_dhl",
    "gamma_set_hl",
]
