"""Local operators: Pauli matrices, truncated boson ladders, paired fermion levels.

Local fermion basis order is (empty, -, +, both). Within a site the ``-`` level
comes first in the Jordan-Wigner ordering, so ``b+`` picks up a sign when the
``-`` level is occupied. Across sites operators are plain tensor products and
commute.
"""

from __future__ import annotations

from typing import Literal

import numpy as np
from scipy import sparse

from laser_sl.core.exceptions import SiteMismatchError
from laser_sl.operators.algebra import SparseOp
from laser_sl.operators.space import Site, SiteKind, SpaceHandle, single_site_space

PauliLabel = Literal["x", "y", "z", "+", "-"]
BosonLabel = Literal["annihilate", "create", "number"]
FermionLevel = Literal["+", "-"]
FermionKind = Literal["annihilate", "create"]

# Basis (|e>, |g>): sigma_z = diag(1, -1), sigma_+ = |e><g|
_PAULI: dict[str, list[list[complex]]] = {
    "x": [[0, 1], [1, 0]],
    "y": [[0, -1j], [1j, 0]],
    "z": [[1, 0], [0, -1]],
    "+": [[0, 1], [0, 0]],
    "-": [[0, 0], [1, 0]],
}

FERMION_BASIS = ("empty", "-", "+", "both")
EMPTY, MINUS, PLUS, BOTH = range(4)


def embed(local: SparseOp, site: int, space: SpaceHandle) -> SparseOp:
    """Kronecker-embed a single-site operator at ``site``.

    Args:
        local: Operator on a one-site space whose site matches ``space.sites[site]``.
        site: Target site index.
        space: Global space.

    Returns:
        I_left (x) local (x) I_right.

    Raises:
        SiteMismatchError: If the local site differs from the target site.
    """
    (local_site,) = local.space.sites
    space.require(site, local_site.kind)
    if space.sites[site] != local_site:
        raise SiteMismatchError(site, local_site.label(), space.sites[site].label())
    left = sparse.identity(space.left_dim(site), dtype=np.complex128, format="csr")
    right = sparse.identity(space.right_dim(site), dtype=np.complex128, format="csr")
    matrix = sparse.kron(sparse.kron(left, local.matrix, format="csr"), right, format="csr")
    return SparseOp(space, matrix, local.hermitian_hint)


def pauli_matrix(which: PauliLabel) -> SparseOp:
    """2x2 Pauli matrix on a bare spin site."""
    space = single_site_space(Site(kind=SiteKind.SPIN))
    hermitian = which in ("x", "y", "z")
    return SparseOp(space, sparse.csr_matrix(np.array(_PAULI[which])), hermitian or None)


def pauli(which: PauliLabel, site: int, space: SpaceHandle) -> SparseOp:
    """Pauli operator at a spin site; sigma_pm = (sigma_x +- i sigma_y)/2."""
    space.require(site, SiteKind.SPIN)
    return embed(pauli_matrix(which), site, space)


def boson_matrix(op: BosonLabel, cutoff: int) -> SparseOp:
    """Truncated ladder matrix with occupations 0..cutoff."""
    space = single_site_space(Site(kind=SiteKind.BOSON, cutoff=cutoff))
    dim = cutoff + 1
    amplitudes = np.sqrt(np.arange(1, dim, dtype=np.float64))
    if op == "annihilate":
        matrix = sparse.diags(amplitudes, offsets=1, shape=(dim, dim))
    elif op == "create":
        matrix = sparse.diags(amplitudes, offsets=-1, shape=(dim, dim))
    else:
        matrix = sparse.diags(np.arange(dim, dtype=np.float64), offsets=0, shape=(dim, dim))
    return SparseOp(space, matrix, True if op == "number" else None)


def boson(op: BosonLabel, mode_site: int, space: SpaceHandle) -> SparseOp:
    """Ladder or number operator at a boson site."""
    site = space.require(mode_site, SiteKind.BOSON)
    assert site.cutoff is not None
    return embed(boson_matrix(op, site.cutoff), mode_site, space)


def fermion_matrix(level: FermionLevel, kind: FermionKind) -> SparseOp:
    """4x4 fermion operator on the local basis (empty, -, +, both)."""
    space = single_site_space(Site(kind=SiteKind.FERMION_PAIR))
    annihilate = np.zeros((4, 4), dtype=np.complex128)
    if level == "-":
        annihilate[EMPTY, MINUS] = 1.0
        annihilate[PLUS, BOTH] = 1.0
    else:
        annihilate[EMPTY, PLUS] = 1.0
        annihilate[MINUS, BOTH] = -1.0
    matrix = annihilate if kind == "annihilate" else annihilate.conj().T
    return SparseOp(space, sparse.csr_matrix(matrix))


def fermion(level: FermionLevel, kind: FermionKind, site: int, space: SpaceHandle) -> SparseOp:
    """Fermion operator of one level at a fermion-pair site."""
    space.require(site, SiteKind.FERMION_PAIR)
    return embed(fermion_matrix(level, kind), site, space)
