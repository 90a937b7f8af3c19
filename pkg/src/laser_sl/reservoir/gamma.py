"""Complex reservoir coefficients Gamma_-.

The canonical form is

    Gamma_- = int_0^inf ds int dw J(w) exp(i Delta(w) s)

regularized as Gamma(eps) = int J(w) / (eps - i Delta(w)) dw and extrapolated
eps -> 0+. The limit has real part pi J(w_root) and imaginary part
P int J(w) / Delta(w) dw.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Literal

import numpy as np
from scipy import integrate

from laser_sl.core.exceptions import (
    NoResonanceInSupport,
    QuadratureDivergence,
    ValidationError,
)
from laser_sl.core.settings import Settings, get_settings
from laser_sl.reservoir.density import (
    FlatDensity,
    LorentzianDensity,
    SpectralDensity,
    SumDensity,
)

logger = logging.getLogger(__name__)

DEFAULT_EPS: tuple[float, ...] = tuple(0.1 * 2.0**-i for i in range(7))

GammaMethod = Literal["auto", "quadrature", "closed_form"]


class ExponentConvention(str, Enum):
    """Sign of the exponent in the half-Fourier transform.

    CANONICAL uses exp(+i Delta s) and gives Re Gamma >= 0. CONJUGATE is the
    opposite sign reading and returns the complex conjugate.
    """

    CANONICAL = "canonical"
    CONJUGATE = "conjugate"


@dataclass(frozen=True)
class Detuning:
    """Affine detuning Delta(w) = sign * (w - reference) with sign = +-1."""

    sign: int
    reference: float

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"detuning sign must be +1 or -1, got {self.sign}")

    def __call__(self, omega: float) -> float:
        return self.sign * (omega - self.reference)

    @property
    def root(self) -> float:
        return self.reference


@dataclass(frozen=True)
class RegularizationReport:
    """How a coefficient was obtained.

    Attributes:
        method: "quadrature" or "closed_form".
        eps: Regularization sequence (empty for closed forms).
        values: Gamma(eps) per entry of ``eps``.
        extrapolated: Value extrapolated to eps -> 0.
        residual: Extrapolation residual estimate.
    """

    method: str
    eps: tuple[float, ...] = ()
    values: tuple[complex, ...] = ()
    extrapolated: complex = 0j
    residual: float = 0.0


@dataclass(frozen=True)
class GammaCoefficient:
    """A Gamma_- value with its provenance.

    Attributes:
        value: Complex coefficient (1/time).
        resonance: Frequency where the delta contribution is evaluated.
        report: Regularization report.
        resonant: Whether the detuning root lies in the density support.
        warning: Set when the residual exceeds the configured tolerance.
        issues: Report-level conditions as error dictionaries.
    """

    value: complex
    resonance: float
    report: RegularizationReport
    resonant: bool = True
    warning: bool = False
    issues: tuple[dict[str, Any], ...] = field(default_factory=tuple)


# === Extrapolation ===


def richardson(eps: Sequence[float], values: Sequence[complex]) -> tuple[complex, float]:
    """Neville extrapolation of values(eps) to eps = 0.

    Returns:
        (extrapolated value, |difference between the two highest-order estimates|)
    """
    x = list(eps)
    n = len(x)
    if n < 2 or n != len(values):
        raise ValueError("need at least two (eps, value) pairs")
    table = [complex(v) for v in values]
    previous = table[0]
    for order in range(1, n):
        previous = table[-2]
        for i in range(n - 1, order - 1, -1):
            lo = i - order
            table[i] = (x[i] * table[i - 1] - x[lo] * table[i]) / (x[i] - x[lo])
    return table[-1], abs(table[-1] - previous)


# === Closed forms ===


def gamma_closed_form(density: SpectralDensity, detuning: Detuning) -> complex | None:
    """Exact eps -> 0 limit where one exists, otherwise None."""
    root = detuning.root
    s = detuning.sign
    if isinstance(density, FlatDensity):
        lo, hi = density.support
        if root in (lo, hi):
            return None
        real = math.pi * density.j0 if lo < root < hi else 0.0
        imag = s * density.j0 * math.log(abs(hi - root) / abs(lo - root))
        return complex(real, imag)
    if isinstance(density, LorentzianDensity) and density.cutoff is None:
        offset = density.center - root
        w = density.width
        real = math.pi * density(root)
        imag = s * math.pi * density.j0 * w * offset / (offset**2 + w**2)
        return complex(real, imag)
    if isinstance(density, SumDensity):
        parts = [gamma_closed_form(t.density, detuning) for t in density.terms]
        if any(p is None for p in parts):
            return None
        return sum(
            (t.weight * p for t, p in zip(density.terms, parts) if p is not None),
            start=0j,
        )
    return None


# === Quadrature ===


def _intervals(
    density: SpectralDensity, root: float
) -> list[tuple[float, float, list[float]]]:
    """Split the support into a finite core with breakpoints plus infinite tails."""
    lo, hi = density.support
    anchor_lo = min(root, density.center)
    anchor_hi = max(root, density.center)
    window = 50.0 * density.scale + 1.0
    core_lo = lo if math.isfinite(lo) else anchor_lo - window
    core_hi = hi if math.isfinite(hi) else anchor_hi + window
    core_lo, core_hi = max(core_lo, lo), min(core_hi, hi)
    points = sorted(
        {p for p in (*density.breakpoints, root, density.center) if core_lo < p < core_hi}
    )
    if len(points) > 100:
        points = [p for p in (root, density.center) if core_lo < p < core_hi]
    pieces: list[tuple[float, float, list[float]]] = []
    if lo < core_lo:
        pieces.append((lo, core_lo, []))
    pieces.append((core_lo, core_hi, points))
    if core_hi < hi:
        pieces.append((core_hi, hi, []))
    return pieces


def _quad(
    fn: Callable[[float], float],
    a: float,
    b: float,
    points: list[float],
    limit: int,
) -> float:
    kwargs: dict[str, Any] = {"limit": limit, "epsabs": 1e-14, "epsrel": 1e-12, "full_output": 1}
    if points:
        kwargs["points"] = points
    result = integrate.quad(fn, a, b, **kwargs)
    if len(result) > 3:
        message = str(result[3])
        if "maximum number of subdivisions" in message:
            raise QuadratureDivergence(
                f"Quadrature on [{a}, {b}] exceeded {limit} subdivisions",
                details={"interval": [a, b], "limit": limit},
            )
        logger.warning("Quadrature on [%g, %g]: %s", a, b, message.splitlines()[0])
    return float(result[0])


def gamma_at_eps(
    density: SpectralDensity,
    detuning: Detuning,
    eps: float,
    limit: int = 500,
) -> complex:
    """Regularized Gamma(eps) = int J(w) (eps + i Delta) / (eps^2 + Delta^2) dw."""

    def real_part(w: float) -> float:
        d = detuning(w)
        return density(w) * eps / (eps * eps + d * d)

    def imag_part(w: float) -> float:
        d = detuning(w)
        return density(w) * d / (eps * eps + d * d)

    re = im = 0.0
    for a, b, points in _intervals(density, detuning.root):
        re += _quad(real_part, a, b, points, limit)
        im += _quad(imag_part, a, b, points, limit)
    return complex(re, im)


def gamma_minus(
    density: SpectralDensity,
    detuning: Detuning,
    eps_seq: Sequence[float] = DEFAULT_EPS,
    *,
    method: GammaMethod = "auto",
    convention: ExponentConvention = ExponentConvention.CANONICAL,
    strict: bool = False,
    settings: Settings | None = None,
) -> GammaCoefficient:
    """Compute Gamma_- for one reservoir channel.

    Args:
        density: Spectral density J.
        detuning: Affine detuning with unit slope.
        eps_seq: Decreasing positive regularization sequence, at least three entries.
        method: "auto" prefers a closed form when one exists.
        convention: Exponent sign convention.
        strict: Raise NoResonanceInSupport instead of recording it.
        settings: Overrides the cached settings.

    Returns:
        The coefficient with its regularization report.

    Raises:
        ValidationError: If eps_seq is too short or not decreasing.
        NoResonanceInSupport: In strict mode when the root is outside the support.
        QuadratureDivergence: If adaptive refinement exceeds the budget.
    """
    settings = settings or get_settings()
    eps = tuple(float(e) for e in eps_seq)
    if len(eps) < 3 or any(e <= 0 for e in eps) or any(b >= a for a, b in zip(eps, eps[1:])):
        raise ValidationError(
            "eps_seq needs >= 3 strictly decreasing positive entries", field="eps_seq"
        )

    lo, hi = density.support
    resonant = lo <= detuning.root <= hi
    issues: list[dict[str, Any]] = []
    if not resonant:
        condition = NoResonanceInSupport(detuning.root, (lo, hi))
        if strict:
            raise condition
        logger.warning("%s", condition.message)
        issues.append(condition.to_dict())

    closed = gamma_closed_form(density, detuning) if method != "quadrature" else None
    if method == "closed_form" and closed is None:
        raise ValidationError(f"No closed form for a {density.form} density", field="method")

    if closed is not None:
        report = RegularizationReport(method="closed_form", extrapolated=closed)
        value, warning = closed, False
    else:
        values = tuple(
            gamma_at_eps(density, detuning, e, limit=settings.quad_limit) for e in eps
        )
        for e, v in zip(eps, values):
            logger.debug("Gamma(eps=%.3e) = %r", e, v)
        value, residual = richardson(eps, values)
        report = RegularizationReport(
            method="quadrature",
            eps=eps,
            values=values,
            extrapolated=value,
            residual=residual,
        )
        scale = max(abs(value), 1.0)
        warning = residual > settings.gamma_tolerance * scale
        if warning:
            logger.warning(
                "Gamma extrapolation residual %.3e above tolerance %.1e",
                residual,
                settings.gamma_tolerance,
            )

    if convention is ExponentConvention.CONJUGATE:
        value = value.conjugate()
    return GammaCoefficient(
        value=complex(value),
        resonance=detuning.root,
        report=report,
        resonant=resonant,
        warning=warning,
        issues=tuple(issues),
    )


# === Time-domain oracle ===


def correlation_function(density: SpectralDensity, detuning: Detuning, s: float) -> complex:
    """Reservoir two-point function C(s) = int J(w) exp(i Delta(w) s) dw.

    Evaluated with Fourier-weighted quadrature around the density center.
    """
    c = density.center
    lo, hi = density.support
    upper = max(hi - c, c - lo)

    def even(u: float) -> float:
        return density(c + u) + density(c - u)

    def odd(u: float) -> float:
        return density(c + u) - density(c - u)

    if s == 0.0:
        base = integrate.quad(even, 0.0, upper, limit=200, epsabs=1e-13)[0]
        return complex(base, 0.0)
    cos_part = integrate.quad(even, 0.0, upper, weight="cos", wvar=s, limit=200, epsabs=1e-13)[0]
    sin_part = integrate.quad(odd, 0.0, upper, weight="sin", wvar=s, limit=200, epsabs=1e-13)[0]
    sigma = detuning.sign
    # int J(c+u) exp(i sigma u s) du = cos_part + i sigma sin_part
    phase = np.exp(1j * sigma * (c - detuning.reference) * s)
    return complex(phase * complex(cos_part, sigma * sin_part))


def gamma_minus_time_domain(
    density: SpectralDensity,
    detuning: Detuning,
    eps_pair: tuple[float, float] = (2e-4, 1e-4),
    s_max: float | None = None,
) -> complex:
    """Independent oracle: damped time integral of C(s), extrapolated in eps.

    Computes int_0^s_max exp(-eps s) C(s) ds for both entries of ``eps_pair``
    and removes the linear eps term. Intended for densities whose correlation
    function decays well inside ``s_max``.
    """
    eps_hi, eps_lo = eps_pair
    if s_max is None:
        s_max = 60.0 / density.scale

    def integrand(s: float) -> np.ndarray[Any, np.dtype[np.float64]]:
        corr = correlation_function(density, detuning, s)
        hi = math.exp(-eps_hi * s) * corr
        lo = math.exp(-eps_lo * s) * corr
        return np.array([hi.real, hi.imag, lo.real, lo.imag])

    result, _ = integrate.quad_vec(integrand, 0.0, s_max, epsabs=1e-12, epsrel=1e-10)
    gamma_hi = complex(result[0], result[1])
    gamma_lo = complex(result[2], result[3])
    return (eps_hi * gamma_lo - eps_lo * gamma_hi) / (eps_hi - eps_lo)
