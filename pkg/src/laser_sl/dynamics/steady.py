"""Stationary states of Schrodinger-picture generators."""

from __future__ import annotations

import logging

import numpy as np
from scipy import linalg

from laser_sl.core.exceptions import (
    DecompositionFailure,
    DegenerateKernelError,
    PictureMismatchError,
    ValidationError,
)
from laser_sl.core.settings import Settings, get_settings
from laser_sl.generators.superoperator import Picture, Superoperator, unvec
from laser_sl.operators.algebra import SparseOp

logger = logging.getLogger(__name__)


def steady_state(
    L: Superoperator, rank_tolerance: float = 1e-10, settings: Settings | None = None
) -> SparseOp:
    """Unique normalized kernel element of L*, hermitized.

    Raises:
        PictureMismatchError: If L is a Heisenberg generator.
        ValidationError: If d^2 exceeds the dense cap.
        DegenerateKernelError: If the kernel is not one-dimensional.
        DecompositionFailure: If the kernel element is traceless.
    """
    if L.picture is not Picture.SCHRODINGER:
        raise PictureMismatchError(Picture.SCHRODINGER.value, L.picture.value)
    settings = settings or get_settings()
    d = L.dim
    if d * d > settings.dense_cap:
        raise ValidationError(
            f"steady_state needs d^2 = {d * d} <= dense_cap = {settings.dense_cap}",
            field="dense_cap",
        )
    kernel = linalg.null_space(L.to_dense(), rcond=rank_tolerance)
    if kernel.shape[1] != 1:
        raise DegenerateKernelError(kernel.shape[1])
    rho = kernel[:, 0].reshape((d, d), order="F")
    tr = complex(np.trace(rho))
    if abs(tr) < rank_tolerance:
        raise DecompositionFailure("Kernel element has zero trace", details={"trace": abs(tr)})
    rho = rho / tr
    rho = 0.5 * (rho + rho.conj().T)
    logger.debug("Steady state: min eig %.3e", float(np.linalg.eigvalsh(rho)[0]))
    return unvec(rho.reshape(-1, order="F"), L.space)
