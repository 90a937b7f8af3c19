"""Second-order terms of the rescaled wave operator, mode by mode in closed form.

For a discretized reservoir with detunings Delta_k = omega_k - omega_ref the
rotating channel gives

    I_lambda(t) = -(1/lambda^2) sum_k g_k^2 int_0^t dt1 int_0^t1 dt2 exp(i a_k (t1 - t2)),

with a_k = Delta_k / lambda^2, so that I_lambda(t) / t -> -Gamma_- as lambda -> 0.
The counter-rotating channel carries the extra phase exp(i b t1), b = 2 omega_R /
lambda^2, on one vertex and vanishes in the limit.
"""

from __future__ import annotations

from typing import Literal

import numpy as np
import numpy.typing as npt

from laser_sl.core.exceptions import OrderViolation, ValidationError
from laser_sl.sl_oracle.reservoir import DiscreteReservoir

ComplexArray = npt.NDArray[np.complex128]
FloatArray = npt.NDArray[np.float64]

Channel = Literal["rotating", "counter_rotating"]

SERIES_THRESHOLD = 1e-3
DERIVATIVE_THRESHOLD = 1e-7


def _check(lam: float, t: float) -> None:
    if not 0 < lam <= 1:
        raise ValidationError(f"lambda must lie in (0, 1], got {lam}", field="lambda")
    if not t > 0:
        raise ValidationError(f"t must be > 0, got {t}", field="t")


def rotating_kernel(a: npt.ArrayLike, t: float) -> ComplexArray:
    """int_0^t dt1 int_0^t1 dt2 exp(i a (t1 - t2)) = (1 + i a t - exp(i a t)) / a^2."""
    a = np.asarray(a, dtype=np.float64)
    x = 1j * a * t
    small = np.abs(x) < SERIES_THRESHOLD
    safe = np.where(small, 1.0, a)
    closed = (1.0 + 1j * safe * t - np.exp(1j * safe * t)) / safe**2
    series = t**2 * (0.5 + x / 6.0 + x**2 / 24.0 + x**3 / 120.0)
    return np.asarray(np.where(small, series, closed), dtype=np.complex128)


def _phase_integral(x: FloatArray, t: float) -> ComplexArray:
    """E(x) = int_0^t exp(i x s) ds."""
    z = 1j * x * t
    small = np.abs(z) < SERIES_THRESHOLD
    safe = np.where(small, 1.0, x)
    closed = (np.exp(1j * safe * t) - 1.0) / (1j * safe)
    series = t * (1.0 + z / 2.0 + z**2 / 6.0 + z**3 / 24.0)
    return np.asarray(np.where(small, series, closed), dtype=np.complex128)


def counter_rotating_kernel(a: npt.ArrayLike, b: float, t: float) -> ComplexArray:
    """int_0^t dt1 int_0^t1 dt2 exp(i a (t1 - t2)) exp(i b t1), for b != 0.

    Equals (E(a + b) - E(b)) / (i a); at a = 0 it is int_0^t s exp(i b s) ds.
    """
    a = np.asarray(a, dtype=np.float64)
    tiny = np.abs(a * t) < DERIVATIVE_THRESHOLD
    safe = np.where(tiny, 1.0, a)
    general = (_phase_integral(safe + b, t) - _phase_integral(np.array([b]), t)) / (1j * safe)
    eibt = np.exp(1j * b * t)
    at_zero = eibt * (t / (1j * b) + 1.0 / b**2) - 1.0 / b**2
    return np.asarray(np.where(tiny, at_zero, general), dtype=np.complex128)


def second_order_term(
    channel: Channel,
    res: DiscreteReservoir,
    reference: float,
    lam: float,
    t: float,
    *,
    omega_r: float | None = None,
    strength: float = 1.0,
) -> complex:
    """I_lambda(t) of one channel; the system-operator factor is left out.

    Args:
        channel: ``rotating`` or ``counter_rotating``.
        res: Discretized reservoir.
        reference: omega_ref in Delta_k = omega_k - omega_ref.
        lam: Coupling lambda in (0, 1].
        t: Macroscopic time, > 0.
        omega_r: Frequency of the counter-rotating phase (defaults to ``reference``).
        strength: Prefactor of the counter-rotating term.

    Raises:
        ValidationError: On lambda, t or omega_r out of range.
    """
    _check(lam, t)
    a = (res.omega - reference) / lam**2
    weights = res.g**2
    if channel == "rotating":
        return complex(-(weights @ rotating_kernel(a, t)) / lam**2)
    omega = reference if omega_r is None else omega_r
    if omega <= 0:
        raise ValidationError(
            f"counter-rotating channel needs omega_R > 0, got {omega}", field="omega_r"
        )
    b = 2.0 * omega / lam**2
    return complex(-strength * (weights @ counter_rotating_kernel(a, b, t)) / lam**2)


def time_consecutive_check(
    res: DiscreteReservoir, reference: float, lam: float, t: float, t_prime: float
) -> float:
    """Magnitude of the first-order reservoir commutator at t with the wave operator up to t'.

    |sum_k g_k^2 (exp(i Delta_k t / lambda^2) - exp(i Delta_k (t - t') / lambda^2)) / (i Delta_k)|,
    where a mode with Delta_k = 0 contributes g_k^2 t' / lambda^2. A continuum makes it vanish
    as lambda -> 0; an isolated mode does not.

    Raises:
        OrderViolation: If t <= t'.
    """
    if not t > t_prime:
        raise OrderViolation(t, t_prime)
    if t_prime < 0:
        raise ValidationError(f"t' must be >= 0, got {t_prime}", field="t_prime")
    _check(lam, t)
    if t_prime == 0:
        return 0.0
    delta = res.omega - reference
    zero = delta == 0.0
    safe = np.where(zero, 1.0, delta)
    terms = (np.exp(1j * safe * t / lam**2) - np.exp(1j * safe * (t - t_prime) / lam**2)) / (
        1j * safe
    )
    terms = np.where(zero, t_prime / lam**2, terms)
    return float(abs(res.g**2 @ terms))
