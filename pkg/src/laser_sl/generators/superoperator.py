"""Superoperators as explicit d^2 x d^2 matrices on column-stacked operators.

Conventions:
    vec(X) stacks the columns of X, so vec(A X B) = kron(B^T, A) vec(X).
    A Heisenberg-picture generator L acts on observables; its Schrodinger dual
    L* = T L^T T, with T the transpose permutation vec(X^T) = T vec(X), satisfies
    tr(L*(rho) X) = tr(rho L(X)).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Any

import numpy as np
import numpy.typing as npt
from scipy import linalg, sparse
from scipy.sparse.linalg import norm as sparse_norm

from laser_sl.core.exceptions import PictureMismatchError, SpaceMismatchError
from laser_sl.core.settings import Settings, get_settings
from laser_sl.operators.algebra import SparseOp
from laser_sl.operators.space import SpaceHandle

logger = logging.getLogger(__name__)

ComplexArray = npt.NDArray[np.complex128]

BLOCK_NAMES = ("L1", "L2", "L3")


class Picture(str, Enum):
    """Whether a generator acts on observables or on density operators."""

    HEISENBERG = "heisenberg"
    SCHRODINGER = "schrodinger"

    @property
    def tag(self) -> int:
        return 0 if self is Picture.HEISENBERG else 1

    def flipped(self) -> Picture:
        return Picture.SCHRODINGER if self is Picture.HEISENBERG else Picture.HEISENBERG


@dataclass(frozen=True, eq=False)
class Superoperator:
    """Linear map on operators of one space, stored as a sparse matrix.

    Attributes:
        space: The space whose operators the map acts on.
        picture: Heisenberg (observables) or Schrodinger (states).
        matrix: d^2 x d^2 CSR matrix acting on column-stacked operators.
        provenance: Model kind and parameter snapshot recorded by the builder.
        blocks: Named additive parts: ``L1`` radiation, ``L2`` matter, ``L3`` coupling.

    Example:
        >>> L = build_as_generator(params, space)
        >>> max_abs(apply(L, space.identity)) < 1e-12
        True
    """

    space: SpaceHandle
    picture: Picture
    matrix: sparse.csr_matrix
    provenance: dict[str, Any] = field(default_factory=dict)
    blocks: dict[str, sparse.csr_matrix] = field(default_factory=dict)

    def __post_init__(self) -> None:
        d2 = self.space.dimension**2
        matrix = sparse.csr_matrix(self.matrix, dtype=np.complex128)
        if matrix.shape != (d2, d2):
            raise SpaceMismatchError(
                f"Superoperator shape {matrix.shape} does not match d^2 = {d2}",
                details={"shape": list(matrix.shape), "d2": d2},
            )
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(
            self,
            "blocks",
            {k: sparse.csr_matrix(v, dtype=np.complex128) for k, v in self.blocks.items()},
        )

    @property
    def dim(self) -> int:
        return self.space.dimension

    @property
    def nnz(self) -> int:
        return int(self.matrix.nnz)

    def norm(self) -> float:
        """Frobenius norm of the matrix."""
        return float(sparse_norm(self.matrix)) if self.matrix.nnz else 0.0

    def to_dense(self) -> ComplexArray:
        return np.asarray(self.matrix.toarray(), dtype=np.complex128)

    def __repr__(self) -> str:
        model = self.provenance.get("model", "?")
        return f"Superoperator(model={model}, picture={self.picture.value}, d={self.dim})"


# === Vectorization ===


def vec(op: SparseOp) -> ComplexArray:
    """Column-stack an operator into a dense vector."""
    return np.asarray(op.to_dense().reshape(-1, order="F"), dtype=np.complex128)


def unvec(vector: npt.ArrayLike, space: SpaceHandle) -> SparseOp:
    d = space.dimension
    array = np.asarray(vector, dtype=np.complex128).reshape((d, d), order="F")
    return SparseOp(space, sparse.csr_matrix(array))


def vec_identity(d: int) -> ComplexArray:
    return np.asarray(np.eye(d, dtype=np.complex128).reshape(-1, order="F"))


@lru_cache(maxsize=16)
def transpose_permutation(d: int) -> sparse.csr_matrix:
    """T with vec(X^T) = T vec(X); symmetric and its own inverse."""
    idx = np.arange(d * d)
    i, j = idx % d, idx // d
    return sparse.csr_matrix(
        (np.ones(d * d, dtype=np.complex128), (j + i * d, idx)), shape=(d * d, d * d)
    )


def left(a: SparseOp) -> sparse.csr_matrix:
    """X -> A X."""
    return sparse.kron(sparse.identity(a.dim, format="csr"), a.matrix, format="csr")


def right(b: SparseOp) -> sparse.csr_matrix:
    """X -> X B."""
    return sparse.kron(b.matrix.T, sparse.identity(b.dim, format="csr"), format="csr")


def sandwich(a: SparseOp, b: SparseOp) -> sparse.csr_matrix:
    """X -> A X B."""
    return sparse.kron(b.matrix.T, a.matrix, format="csr")


def hamiltonian_term(h: SparseOp) -> sparse.csr_matrix:
    """X -> i[H, X]."""
    return sparse.csr_matrix(1j * (left(h) - right(h)))


def lindblad_term(jump: SparseOp, rate: float) -> sparse.csr_matrix:
    """Heisenberg dissipator X -> rate (J^dag X J - {J^dag J, X} / 2)."""
    jump_dag = jump.adjoint()
    number = jump_dag @ jump
    anti = left(number) + right(number)
    return sparse.csr_matrix(rate * (sandwich(jump_dag, jump) - 0.5 * anti))


def sl_term(a: SparseOp, b: SparseOp, gamma: complex) -> sparse.csr_matrix:
    """Stochastic-limit pair X -> Gamma [A, X] B - conj(Gamma) A [B, X].

    With B = A^dag this is the Heisenberg GKSL term of jump B at rate 2 Re Gamma plus
    the shift i[Im Gamma A B, X].
    """
    ab = a @ b
    g = complex(gamma)
    return sparse.csr_matrix(
        2.0 * g.real * sandwich(a, b) - g * right(ab) - g.conjugate() * left(ab)
    )


# === Application and duality ===


def apply(L: Superoperator, X: SparseOp) -> SparseOp:
    """L(X) for a Heisenberg-picture generator.

    Raises:
        SpaceMismatchError: If X lives on another space.
        PictureMismatchError: If L is in the Schrodinger picture.
    """
    if X.space is not L.space and X.space.spec != L.space.spec:
        raise SpaceMismatchError("Operator and superoperator live on different spaces")
    if L.picture is not Picture.HEISENBERG:
        raise PictureMismatchError(Picture.HEISENBERG.value, L.picture.value)
    return unvec(L.matrix @ vec(X), L.space)


def apply_dual(L: Superoperator, rho: SparseOp) -> SparseOp:
    """L*(rho) for a Schrodinger-picture generator."""
    if rho.space is not L.space and rho.space.spec != L.space.spec:
        raise SpaceMismatchError("Operator and superoperator live on different spaces")
    if L.picture is not Picture.SCHRODINGER:
        raise PictureMismatchError(Picture.SCHRODINGER.value, L.picture.value)
    return unvec(L.matrix @ vec(rho), L.space)


def _dual_matrix(matrix: sparse.csr_matrix, d: int) -> sparse.csr_matrix:
    t = transpose_permutation(d)
    return sparse.csr_matrix(t @ matrix.T @ t)


def dual(L: Superoperator) -> Superoperator:
    """The dual map in the other picture; dual(dual(L)) == L."""
    return Superoperator(
        space=L.space,
        picture=L.picture.flipped(),
        matrix=_dual_matrix(L.matrix, L.dim),
        provenance=dict(L.provenance),
        blocks={k: _dual_matrix(v, L.dim) for k, v in L.blocks.items()},
    )


def to_schrodinger(L: Superoperator) -> Superoperator:
    return L if L.picture is Picture.SCHRODINGER else dual(L)


def to_heisenberg(L: Superoperator) -> Superoperator:
    return L if L.picture is Picture.HEISENBERG else dual(L)


def difference_norms(a: Superoperator, b: Superoperator) -> dict[str, float]:
    """Absolute and relative Frobenius distance, total and per block.

    Raises:
        SpaceMismatchError: If the generators act on different spaces.
        PictureMismatchError: If the pictures differ.
    """
    if a.space.spec != b.space.spec:
        raise SpaceMismatchError(
            "Cannot compare generators on different spaces",
            details={"a": a.space.dimension, "b": b.space.dimension},
        )
    if a.picture is not b.picture:
        raise PictureMismatchError(a.picture.value, b.picture.value)

    def norm(m: sparse.csr_matrix) -> float:
        return float(sparse_norm(m)) if m.nnz else 0.0

    out: dict[str, float] = {}
    reference = norm(a.matrix)
    absolute = norm(sparse.csr_matrix(a.matrix - b.matrix))
    out["total.abs"] = absolute
    out["total.rel"] = absolute / reference if reference > 0 else absolute
    for name in BLOCK_NAMES:
        if name in a.blocks and name in b.blocks:
            ref = norm(a.blocks[name])
            diff = norm(sparse.csr_matrix(a.blocks[name] - b.blocks[name]))
            out[f"{name}.abs"] = diff
            out[f"{name}.rel"] = diff / ref if ref > 0 else diff
    return out


# === Invariants ===


@dataclass(frozen=True)
class InvariantReport:
    """Structural residuals of a generator, relative to its Frobenius norm.

    Attributes:
        identity_residual: max|L(I)| (Heisenberg) or max|tr L*(.)| (Schrodinger).
        hermiticity_residual: max over the matrix-unit basis of |L(X^dag) - L(X)^dag|.
        norm: Frobenius norm of L.
        kernel_dimension: Dimension of ker L, or None above the dense cap.
    """

    picture: Picture
    identity_residual: float
    hermiticity_residual: float
    norm: float
    kernel_dimension: int | None

    def ok(self, tolerance: float = 1e-12) -> bool:
        bound = tolerance * max(self.norm, 1.0)
        return self.identity_residual <= bound and self.hermiticity_residual <= bound


def _max_abs(m: Any) -> float:
    if sparse.issparse(m):
        data = sparse.csr_matrix(m).data
        return float(np.abs(data).max(initial=0.0))
    array = np.abs(np.asarray(m))
    return float(array.max()) if array.size else 0.0


def kernel_dimension(L: Superoperator, rank_tolerance: float = 1e-10) -> int:
    """Dimension of the kernel of the dense matrix."""
    dense = L.to_dense()
    return int(linalg.null_space(dense, rcond=rank_tolerance).shape[1])


def invariant_report(L: Superoperator, settings: Settings | None = None) -> InvariantReport:
    """Identity, hermiticity and (for small d) kernel checks on L."""
    settings = settings or get_settings()
    d = L.dim
    one = vec_identity(d)
    if L.picture is Picture.HEISENBERG:
        identity_residual = float(np.abs(L.matrix @ one).max())
    else:
        identity_residual = float(np.abs(L.matrix.T @ one).max())
    # Hermiticity preservation on every matrix unit: L T conj = T conj(L).
    t = transpose_permutation(d)
    hermiticity_residual = _max_abs(L.matrix @ t - t @ L.matrix.conj())
    kernel = kernel_dimension(L) if d * d <= settings.dense_cap else None
    report = InvariantReport(
        picture=L.picture,
        identity_residual=identity_residual,
        hermiticity_residual=hermiticity_residual,
        norm=L.norm(),
        kernel_dimension=kernel,
    )
    logger.debug("Invariants of %r: %s", L, report)
    return report
