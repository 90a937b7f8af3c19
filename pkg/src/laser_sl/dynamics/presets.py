"""Named initial states and observables of laser spaces.

Observable names: ``sz[r]``, ``sp[r]``, ``sm[r]`` for lattice sites r = -N..N,
``n[l]``, ``a[l]`` for modes l = 0..n-1 and ``id``.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from typing import Literal

import numpy as np
from scipy import sparse

from laser_sl.core.exceptions import ValidationError
from laser_sl.operators.algebra import SparseOp, identity
from laser_sl.operators.composite import LaserLayout, laser_layout, spin_from_fermions
from laser_sl.operators.local import MINUS, PLUS, boson, pauli
from laser_sl.operators.space import SiteKind, SpaceHandle

StatePreset = Literal["down", "up", "mixed"]
STATE_PRESETS: tuple[str, ...] = ("down", "up", "mixed")

_OBSERVABLE = re.compile(r"^(sz|sp|sm|n|a)\[(-?\d+)\]$|^id$")

# Local index of the lower / upper level per matter kind.
_LEVELS = {
    SiteKind.SPIN: {"down": 1, "up": 0},
    SiteKind.FERMION_PAIR: {"down": MINUS, "up": PLUS},
}


def matter_kind(space: SpaceHandle) -> SiteKind:
    """Kind of the atom sites (the first site) of a laser space."""
    kind = space.sites[0].kind
    if kind is SiteKind.BOSON:
        raise ValidationError("Laser space must start with its atom sites", field="space")
    return kind


def initial_state(preset: StatePreset | str, space: SpaceHandle) -> SparseOp:
    """``down`` or ``up``: every atom in that level, modes in the vacuum.
    ``mixed``: I / d.
    """
    if preset == "mixed":
        return SparseOp(space, identity(space).matrix / space.dimension, True)
    if preset not in _LEVELS[SiteKind.SPIN]:
        raise ValidationError(
            f"Unknown initial state {preset!r}; expected one of {', '.join(STATE_PRESETS)}",
            field="initial_state",
        )
    matrix = sparse.identity(1, dtype=np.complex128, format="csr")
    for site in space.sites:
        local = sparse.lil_matrix((site.dim, site.dim), dtype=np.complex128)
        if site.kind is SiteKind.BOSON:
            local[0, 0] = 1.0
        else:
            level = _LEVELS[site.kind][preset]
            local[level, level] = 1.0
        matrix = sparse.kron(matrix, local.tocsr(), format="csr")
    return SparseOp(space, matrix, True)


def _spin_ops(
    layout: LaserLayout, r: int, space: SpaceHandle
) -> tuple[SparseOp, SparseOp, SparseOp]:
    site = layout.atom(r)
    if layout.matter is SiteKind.SPIN:
        return pauli("+", site, space), pauli("-", site, space), pauli("z", site, space)
    return spin_from_fermions(site, space)


def observable(name: str, space: SpaceHandle) -> SparseOp:
    """Resolve one observable name on a laser space.

    Raises:
        ValidationError: On an unknown name or an out-of-range index.
    """
    match = _OBSERVABLE.match(name.strip())
    if match is None:
        raise ValidationError(f"Unknown observable {name!r}", field="observables")
    if name.strip() == "id":
        return identity(space)
    kind, index = match.group(1), int(match.group(2))
    layout = laser_layout(space, matter_kind(space))
    if kind in ("sz", "sp", "sm"):
        if not -layout.N <= index <= layout.N:
            raise ValidationError(
                f"{name}: lattice index outside -{layout.N}..{layout.N}", field="observables"
            )
        plus, minus, z = _spin_ops(layout, index, space)
        return {"sp": plus, "sm": minus, "sz": z}[kind]
    if not 0 <= index < layout.n:
        raise ValidationError(f"{name}: mode index outside 0..{layout.n - 1}", field="observables")
    mode = layout.mode_sites[index]
    return boson("number" if kind == "n" else "annihilate", mode, space)


def observables(names: Sequence[str], space: SpaceHandle) -> dict[str, SparseOp]:
    """Resolve several names, preserving their order."""
    return {name: observable(name, space) for name in names}
