"""Sparse operators on a space and their algebra.

All arithmetic is exact sparse arithmetic: no entry is ever pruned by magnitude,
so identities such as ``commutator(X, X) == 0`` hold to the last bit.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt
from scipy import sparse

from laser_sl.core.exceptions import HermiticityError, SpaceMismatchError
from laser_sl.operators.space import SpaceHandle

ComplexArray = npt.NDArray[np.complex128]


def _as_csr(matrix: Any) -> sparse.csr_matrix:
    out = sparse.csr_matrix(matrix, dtype=np.complex128)
    out.eliminate_zeros()
    out.sort_indices()
    return out


@dataclass(frozen=True, eq=False)
class SparseOp:
    """Complex sparse matrix acting on a space.

    Attributes:
        space: The space the operator acts on.
        matrix: d x d CSR matrix.
        hermitian_hint: When True, the matrix is verified to equal its adjoint exactly.

    Example:
        >>> space = build_space(HilbertSpec(sites=(Site(kind=SiteKind.SPIN),)))
        >>> sz = pauli("z", 0, space)
        >>> trace(sz)
        0j
    """

    space: SpaceHandle
    matrix: sparse.csr_matrix
    hermitian_hint: bool | None = None

    def __post_init__(self) -> None:
        csr = _as_csr(self.matrix)
        d = self.space.dimension
        if csr.shape != (d, d):
            raise SpaceMismatchError(
                f"Matrix shape {csr.shape} does not match space dimension {d}",
                details={"shape": list(csr.shape), "dimension": d},
            )
        object.__setattr__(self, "matrix", csr)
        if self.hermitian_hint:
            deviation = _max_abs(csr - csr.conj().T)
            if deviation != 0.0:
                raise HermiticityError(deviation)

    @property
    def dim(self) -> int:
        return self.space.dimension

    @property
    def nnz(self) -> int:
        return int(self.matrix.nnz)

    def to_dense(self) -> ComplexArray:
        return np.asarray(self.matrix.toarray(), dtype=np.complex128)

    def adjoint(self) -> SparseOp:
        return SparseOp(self.space, self.matrix.conj().T, self.hermitian_hint)

    def __add__(self, other: SparseOp) -> SparseOp:
        return add(self, other)

    def __sub__(self, other: SparseOp) -> SparseOp:
        return add(self, scale(other, -1.0))

    def __neg__(self) -> SparseOp:
        return scale(self, -1.0)

    def __matmul__(self, other: SparseOp) -> SparseOp:
        return mul(self, other)

    def __mul__(self, factor: complex) -> SparseOp:
        return scale(self, factor)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"SparseOp(dim={self.dim}, nnz={self.nnz})"


def _max_abs(matrix: sparse.spmatrix) -> float:
    data = sparse.csr_matrix(matrix).data
    return float(np.max(np.abs(data))) if data.size else 0.0


def _check_same_space(*ops: SparseOp) -> SpaceHandle:
    space = ops[0].space
    for op in ops[1:]:
        if op.space != space:
            raise SpaceMismatchError(
                "Operands act on different spaces",
                details={"dimensions": [o.dim for o in ops]},
            )
    return space


def identity(space: SpaceHandle) -> SparseOp:
    """Identity operator on ``space``."""
    return SparseOp(space, sparse.identity(space.dimension, format="csr"), hermitian_hint=True)


def zero(space: SpaceHandle) -> SparseOp:
    d = space.dimension
    return SparseOp(space, sparse.csr_matrix((d, d), dtype=np.complex128), hermitian_hint=True)


def from_dense(space: SpaceHandle, array: npt.ArrayLike) -> SparseOp:
    """Wrap a dense array as an operator on ``space``."""
    return SparseOp(space, sparse.csr_matrix(np.asarray(array, dtype=np.complex128)))


def mul(a: SparseOp, b: SparseOp) -> SparseOp:
    space = _check_same_space(a, b)
    return SparseOp(space, a.matrix @ b.matrix)


def add(a: SparseOp, b: SparseOp) -> SparseOp:
    space = _check_same_space(a, b)
    return SparseOp(space, a.matrix + b.matrix)


def scale(a: SparseOp, factor: complex) -> SparseOp:
    hint = a.hermitian_hint if complex(factor).imag == 0 else None
    return SparseOp(a.space, a.matrix * factor, hint)


def adjoint(a: SparseOp) -> SparseOp:
    return a.adjoint()


def commutator(a: SparseOp, b: SparseOp) -> SparseOp:
    """[A, B] = AB - BA."""
    space = _check_same_space(a, b)
    return SparseOp(space, a.matrix @ b.matrix - b.matrix @ a.matrix)


def anticommutator(a: SparseOp, b: SparseOp) -> SparseOp:
    """{A, B} = AB + BA."""
    space = _check_same_space(a, b)
    return SparseOp(space, a.matrix @ b.matrix + b.matrix @ a.matrix)


def frobenius_norm(a: SparseOp) -> float:
    data = a.matrix.data
    return float(np.sqrt(np.sum(np.abs(data) ** 2)))


def trace(a: SparseOp) -> complex:
    return complex(a.matrix.diagonal().sum())


def max_abs(a: SparseOp) -> float:
    """Largest entry modulus, the entrywise error measure used by equivalence checks."""
    return _max_abs(a.matrix)


def total(ops: Sequence[SparseOp], space: SpaceHandle) -> SparseOp:
    """Sum of a possibly empty list of operators."""
    result = zero(space)
    for op in ops:
        result = add(result, op)
    return result
