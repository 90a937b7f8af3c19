"""Complete-positivity certificate through the Kossakowski matrix."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from laser_sl.core.exceptions import DecompositionFailure, ValidationError
from laser_sl.core.settings import Settings, get_settings
from laser_sl.generators.superoperator import Superoperator, to_schrodinger

logger = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]
ComplexArray = npt.NDArray[np.complex128]


@dataclass(frozen=True)
class CPReport:
    """Result of the Kossakowski check.

    Attributes:
        eigenvalues: Ascending eigenvalues of the Kossakowski matrix.
        min_eigenvalue: Smallest eigenvalue (0.0 for d = 1).
        tolerance: Threshold below which a negative eigenvalue flags non-CP.
        hermiticity_deviation: max|C - C^dag| of the full coefficient matrix.
    """

    eigenvalues: FloatArray
    min_eigenvalue: float
    tolerance: float
    hermiticity_deviation: float

    @property
    def completely_positive(self) -> bool:
        return self.min_eigenvalue >= -self.tolerance


def _traceless_basis(d: int) -> ComplexArray:
    """Orthonormal operator basis (row-major vectors) whose first element is I / sqrt(d).

    A Householder reflection maps e_0 onto vec(I)/sqrt(d); its remaining columns
    span the traceless operators.
    """
    n = d * d
    u = np.eye(d).reshape(-1) / np.sqrt(d)
    v = u.copy()
    v[0] -= 1.0
    norm2 = float(v @ v)
    basis = np.eye(n)
    if norm2 > 0.0:
        basis = basis - 2.0 * np.outer(v, v) / norm2
    return np.asarray(basis, dtype=np.complex128)


def coefficient_matrix(L: Superoperator) -> ComplexArray:
    """Coefficients c_kl of L*(rho) = sum_kl c_kl F_k rho F_l^dag in the traceless basis."""
    d = L.dim
    schrodinger = to_schrodinger(L).to_dense()
    # Column-major vec index i + j d; C-order reshape yields axes (j, i, n, m).
    s4 = schrodinger.reshape(d, d, d, d)
    reshuffled = np.einsum("jinm->imjn", s4).reshape(d * d, d * d)
    basis = _traceless_basis(d)
    return np.asarray(basis.conj().T @ reshuffled @ basis, dtype=np.complex128)


def kossakowski_check(
    L: Superoperator, tolerance: float = 1e-10, settings: Settings | None = None
) -> CPReport:
    """Smallest eigenvalue of the Kossakowski matrix of L.

    Args:
        L: Generator in either picture; the Schrodinger form is analyzed.
        tolerance: Negative eigenvalues down to -tolerance still count as CP.
        settings: Process settings (dense cap).

    Returns:
        The CP report; ``completely_positive`` is True iff min eigenvalue >= -tolerance.

    Raises:
        DecompositionFailure: If L does not preserve hermiticity.
        ValidationError: If d^2 exceeds the dense cap.
    """
    settings = settings or get_settings()
    d = L.dim
    if d * d > settings.dense_cap:
        raise ValidationError(
            f"Kossakowski check needs d^2 = {d * d} <= dense_cap = {settings.dense_cap}",
            field="dense_cap",
        )
    coefficients = coefficient_matrix(L)
    deviation = float(np.abs(coefficients - coefficients.conj().T).max())
    scale = max(float(np.abs(coefficients).max()), 1.0)
    if deviation > tolerance * scale:
        raise DecompositionFailure(
            "Generator does not preserve hermiticity; no hermitian Kossakowski matrix",
            details={"deviation": deviation},
        )
    block = coefficients[1:, 1:]
    if block.size == 0:
        eigenvalues = np.zeros(0, dtype=np.float64)
        minimum = 0.0
    else:
        eigenvalues = np.linalg.eigvalsh(0.5 * (block + block.conj().T))
        minimum = float(eigenvalues[0])
    report = CPReport(
        eigenvalues=np.asarray(eigenvalues, dtype=np.float64),
        min_eigenvalue=minimum,
        tolerance=tolerance,
        hermiticity_deviation=deviation,
    )
    if not report.completely_positive:
        logger.warning("Kossakowski matrix has a negative eigenvalue %.3e", minimum)
    return report
