"""Time evolution under a generator with trace, hermiticity and positivity monitors.

Both pictures are integrated with the embedded 8(5,3) Runge-Kutta pair of
``scipy.integrate.DOP853`` segment by segment between output times. After each
step the trace drift is checked; a step whose drift exceeds ``100 * tol`` rejects
the segment, which restarts from the last output state with half the step size.

Phase convention: tr(rho(t) s^+) follows the Heisenberg eigenvalue of s^+, so a
single atom with lambda = 0 gives <s^+>(t) = exp(-(gamma1 - i epsilon) t) <s^+>(0)
and <s^->(t) = exp(-(gamma1 + i epsilon) t) <s^->(0).
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping, Sequence

import numpy as np
import numpy.typing as npt
from scipy.integrate import DOP853

from laser_sl.core.exceptions import (
    MonitorBreach,
    PictureMismatchError,
    SpaceMismatchError,
    StepSizeUnderflow,
    ValidationError,
)
from laser_sl.dynamics.trajectory import Trajectory
from laser_sl.generators.superoperator import Picture, Superoperator, vec, vec_identity
from laser_sl.operators.algebra import SparseOp

logger = logging.getLogger(__name__)

ComplexArray = npt.NDArray[np.complex128]
FloatArray = npt.NDArray[np.float64]

MAX_REJECTIONS = 8
DRIFT_FACTOR = 100.0
STATE_TOLERANCE = 1e-12
POSITIVITY_WARNING = -1e-8


def _check_grid(t_grid: Sequence[float], tol: float) -> FloatArray:
    times = np.asarray(t_grid, dtype=np.float64)
    if times.ndim != 1 or times.size == 0:
        raise ValidationError("t_grid must be a non-empty 1-D sequence", field="t_grid")
    if times.size > 1 and np.any(np.diff(times) <= 0):
        raise ValidationError("t_grid must be strictly increasing", field="t_grid")
    if not tol > 0:
        raise ValidationError(f"tol must be > 0, got {tol}", field="tol")
    return times


def _check_state(rho0: SparseOp) -> None:
    dense = rho0.to_dense()
    herm = float(np.abs(dense - dense.conj().T).max())
    if herm > STATE_TOLERANCE:
        raise ValidationError(
            f"Initial state is not hermitian (deviation {herm:.3e})", field="rho0"
        )
    tr = complex(np.trace(dense))
    if abs(tr - 1.0) > STATE_TOLERANCE:
        raise ValidationError(f"Initial state has trace {tr}, expected 1", field="rho0")
    min_eig = float(np.linalg.eigvalsh(0.5 * (dense + dense.conj().T))[0])
    if min_eig < -STATE_TOLERANCE:
        raise ValidationError(
            f"Initial state is not positive (min eig {min_eig:.3e})", field="rho0"
        )


def _check_space(L: Superoperator, ops: Sequence[SparseOp]) -> None:
    for op in ops:
        if op.space is not L.space and op.space.spec != L.space.spec:
            raise SpaceMismatchError("Operator and generator live on different spaces")


def _min_eig(rho: ComplexArray) -> float:
    return float(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0])


def _propagate(
    fun: Callable[[float, ComplexArray], ComplexArray],
    y0: ComplexArray,
    times: FloatArray,
    tol: float,
    drift: Callable[[ComplexArray], float],
    record: Callable[[int, ComplexArray], None],
    max_rejections: int,
) -> dict[str, int]:
    bound = DRIFT_FACTOR * tol
    stats = {"steps": 0, "rejections": 0, "nfev": 0}
    y = y0
    record(0, y)
    for k in range(1, len(times)):
        t0, t1 = float(times[k - 1]), float(times[k])
        max_step = np.inf
        rejections = 0
        while True:
            solver = DOP853(fun, t0, y, t1, rtol=tol, atol=tol, max_step=max_step)
            breach: tuple[float, float] | None = None
            while solver.status == "running":
                message = solver.step()
                if solver.status == "failed":
                    raise StepSizeUnderflow(solver.t, message or "integrator failed")
                stats["steps"] += 1
                deviation = drift(solver.y)
                if deviation > bound:
                    breach = (solver.t, deviation)
                    break
            stats["nfev"] += solver.nfev
            if breach is None:
                break
            rejections += 1
            stats["rejections"] += 1
            logger.debug(
                "Rejected segment [%g, %g]: drift %.3e at t=%g", t0, t1, breach[1], breach[0]
            )
            if rejections >= max_rejections:
                raise MonitorBreach(breach[0], breach[1], bound)
            last = solver.step_size if solver.step_size else t1 - t0
            max_step = 0.5 * min(max_step, last)
        y = solver.y
        record(k, y)
    logger.debug("Integration finished: %s", stats)
    return stats


def evolve(
    L: Superoperator,
    rho0: SparseOp,
    t_grid: Sequence[float],
    tol: float = 1e-10,
    *,
    observables: Mapping[str, SparseOp] | None = None,
    max_rejections: int = MAX_REJECTIONS,
) -> Trajectory:
    """Integrate d rho / dt = L*(rho) and record expectations at every grid time.

    Args:
        L: Schrodinger-picture generator.
        rho0: Initial density operator (hermitian, unit trace, PSD).
        t_grid: Strictly increasing output times; the first is the initial time.
        tol: Relative and absolute per-step tolerance.
        observables: Named observables; expectations are tr(rho(t) X).
        max_rejections: Rejected restarts per segment before giving up.

    Raises:
        PictureMismatchError: If L is a Heisenberg generator.
        ValidationError: On a malformed grid or initial state.
        StepSizeUnderflow: If the integrator fails.
        MonitorBreach: If the trace drift cannot be kept below 100 * tol.
    """
    if L.picture is not Picture.SCHRODINGER:
        raise PictureMismatchError(Picture.SCHRODINGER.value, L.picture.value)
    observables = dict(observables or {})
    _check_space(L, [rho0, *observables.values()])
    times = _check_grid(t_grid, tol)
    _check_state(rho0)

    d = L.dim
    one = vec_identity(d)
    # tr(rho X) = vec(X^T) . vec(rho)
    weights = np.array([vec(X.adjoint()).conj() for X in observables.values()]).reshape(
        len(observables), d * d
    )
    names = list(observables)
    values = np.zeros((len(times), len(names)), dtype=np.complex128)
    trace_dev = np.zeros(len(times))
    herm_dev = np.zeros(len(times))
    min_eig = np.zeros(len(times))
    matrix = L.matrix

    def fun(t: float, y: ComplexArray) -> ComplexArray:
        return np.asarray(matrix @ y, dtype=np.complex128)

    def drift(y: ComplexArray) -> float:
        return float(abs(one @ y - 1.0))

    def record(k: int, y: ComplexArray) -> None:
        rho = y.reshape((d, d), order="F")
        values[k] = weights @ y
        trace_dev[k] = drift(y)
        herm_dev[k] = float(np.abs(rho - rho.conj().T).max())
        min_eig[k] = _min_eig(rho)
        if min_eig[k] < POSITIVITY_WARNING:
            logger.warning("Positivity monitor: min eig %.3e at t=%g", min_eig[k], times[k])

    y0 = vec(rho0)
    stats = _propagate(fun, y0, times, tol, drift, record, max_rejections)
    return Trajectory(
        times=times,
        names=names,
        values=values,
        trace_dev=trace_dev,
        herm_dev=herm_dev,
        min_eig=min_eig,
        stats=stats,
    )


def heisenberg_expectations(
    L: Superoperator,
    observables: Mapping[str, SparseOp],
    rho0: SparseOp,
    t_grid: Sequence[float],
    tol: float = 1e-10,
    *,
    max_rejections: int = MAX_REJECTIONS,
) -> Trajectory:
    """Evolve observables with dX/dt = L(X) and contract with rho0.

    The identity is carried along as an extra column: its drift plays the role of
    the trace monitor and its hermiticity that of the state hermiticity monitor.
    ``min_eig`` reports the (constant) smallest eigenvalue of rho0.

    Raises:
        PictureMismatchError: If L is a Schrodinger generator.
        ValidationError, StepSizeUnderflow, MonitorBreach: As :func:`evolve`.
    """
    if L.picture is not Picture.HEISENBERG:
        raise PictureMismatchError(Picture.HEISENBERG.value, L.picture.value)
    observables = dict(observables)
    _check_space(L, [rho0, *observables.values()])
    times = _check_grid(t_grid, tol)
    _check_state(rho0)

    d = L.dim
    d2 = d * d
    columns = len(observables) + 1
    names = list(observables)
    identity = vec_identity(d)
    state = vec(rho0.adjoint()).conj()  # vec(rho0^T)
    y0 = np.concatenate([*(vec(X) for X in observables.values()), identity])
    rho_min = _min_eig(rho0.to_dense())
    values = np.zeros((len(times), len(names)), dtype=np.complex128)
    trace_dev = np.zeros(len(times))
    herm_dev = np.zeros(len(times))
    min_eig = np.full(len(times), rho_min)
    matrix = L.matrix

    def fun(t: float, y: ComplexArray) -> ComplexArray:
        block = y.reshape((d2, columns), order="F")
        return np.asarray(matrix @ block, dtype=np.complex128).reshape(-1, order="F")

    def drift(y: ComplexArray) -> float:
        return float(abs(state @ y[-d2:] - 1.0))

    def record(k: int, y: ComplexArray) -> None:
        block = y.reshape((d2, columns), order="F")
        values[k] = state @ block[:, :-1]
        trace_dev[k] = drift(y)
        evolved_identity = block[:, -1].reshape((d, d), order="F")
        herm_dev[k] = float(np.abs(evolved_identity - evolved_identity.conj().T).max())

    stats = _propagate(fun, y0, times, tol, drift, record, max_rejections)
    return Trajectory(
        times=times,
        names=names,
        values=values,
        trace_dev=trace_dev,
        herm_dev=herm_dev,
        min_eig=min_eig,
        stats=stats,
    )
