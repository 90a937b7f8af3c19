"""Model-level composite operators: radiation field, fermion-built spins, projectors."""

from __future__ import annotations

import cmath
import math
from collections.abc import Sequence
from dataclasses import dataclass

from laser_sl.core.exceptions import ParamMismatchError, SpaceMismatchError
from laser_sl.operators.algebra import SparseOp, add, mul, scale, total
from laser_sl.operators.local import boson, fermion
from laser_sl.operators.space import SiteKind, SpaceHandle


@dataclass(frozen=True)
class LaserLayout:
    """Atoms at sites 0..2N, boson modes after them.

    Attributes:
        N: Half-chain size; lattice sites run over r = -N..N.
        n: Number of boson modes.
        matter: Kind of the atom sites.
        atom_sites: Space indices of the atoms, lattice site r at index r + N.
        mode_sites: Space indices of the modes in order l = 0..n-1.
    """

    N: int
    n: int
    matter: SiteKind
    atom_sites: tuple[int, ...]
    mode_sites: tuple[int, ...]

    def atom(self, r: int) -> int:
        """Space index of lattice site r."""
        if not -self.N <= r <= self.N:
            raise SpaceMismatchError(f"Lattice site {r} outside -{self.N}..{self.N}")
        return self.atom_sites[r + self.N]

    @property
    def lattice(self) -> range:
        return range(-self.N, self.N + 1)


def laser_layout(space: SpaceHandle, matter: SiteKind) -> LaserLayout:
    """Check the [matter x (2N+1), boson x n] layout and return it.

    Raises:
        SpaceMismatchError: If sites are out of order or the atom count is even.
    """
    kinds = [s.kind for s in space.sites]
    n_atoms = 0
    while n_atoms < len(kinds) and kinds[n_atoms] is matter:
        n_atoms += 1
    rest = kinds[n_atoms:]
    if n_atoms == 0 or n_atoms % 2 == 0 or any(k is not SiteKind.BOSON for k in rest):
        raise SpaceMismatchError(
            f"Expected [{matter.value} x (2N+1), boson x n], got {[k.value for k in kinds]}",
            details={"sites": [k.value for k in kinds]},
        )
    return LaserLayout(
        N=(n_atoms - 1) // 2,
        n=len(rest),
        matter=matter,
        atom_sites=tuple(range(n_atoms)),
        mode_sites=tuple(range(n_atoms, len(kinds))),
    )


def radiation_field(N: int, lambdas: Sequence[float], space: SpaceHandle) -> list[SparseOp]:
    """Site-resolved radiation field.

    phi_r = -i (2N+1)^(-1/2) sum_l lambda_l a_l exp(2 pi i l r / n), r = -N..N.

    Args:
        N: Half-chain size.
        lambdas: Real couplings, one per boson mode.
        space: Space whose boson sites are the modes in order.

    Returns:
        List indexed by r + N.

    Raises:
        ParamMismatchError: If the coupling count differs from the mode count.
    """
    modes = space.indices(SiteKind.BOSON)
    n = len(modes)
    if len(lambdas) != n:
        raise ParamMismatchError("lambdas", n, len(lambdas))
    norm = 1.0 / math.sqrt(2 * N + 1)
    annihilators = [boson("annihilate", site, space) for site in modes]
    fields = []
    for r in range(-N, N + 1):
        terms = [
            scale(a_mode, -1j * norm * lam * cmath.exp(2j * math.pi * mode * r / n))
            for mode, (lam, a_mode) in enumerate(zip(lambdas, annihilators))
        ]
        fields.append(total(terms, space))
    return fields


def spin_from_fermions(site: int, space: SpaceHandle) -> tuple[SparseOp, SparseOp, SparseOp]:
    """(sigma_+, sigma_-, sigma_z) = (b+^dag b-, b-^dag b+, n+ - n-) at one site."""
    b_plus = fermion("+", "annihilate", site, space)
    b_minus = fermion("-", "annihilate", site, space)
    sigma_plus = mul(b_plus.adjoint(), b_minus)
    sigma_minus = mul(b_minus.adjoint(), b_plus)
    sigma_z = add(mul(b_plus.adjoint(), b_plus), scale(mul(b_minus.adjoint(), b_minus), -1.0))
    return sigma_plus, sigma_minus, sigma_z


def projector_phys(site: int, space: SpaceHandle) -> SparseOp:
    """Projector on the one-electron subspace n+ + n- = 1 at a site."""
    n_plus = mul(fermion("+", "create", site, space), fermion("+", "annihilate", site, space))
    n_minus = mul(fermion("-", "create", site, space), fermion("-", "annihilate", site, space))
    both = mul(n_plus, n_minus)
    return SparseOp(space, (n_plus.matrix + n_minus.matrix - 2 * both.matrix), True)


@dataclass(frozen=True)
class CompositeModelOps:
    """Composite operators of a laser layout.

    Attributes:
        phi: Radiation field per lattice site, indexed by r + N.
        sigma_from_fermions: Fermion-built spin triples per atom (fermion layouts only).
        projector_phys: One-electron projectors per atom (fermion layouts only).
    """

    phi: list[SparseOp]
    sigma_from_fermions: list[tuple[SparseOp, SparseOp, SparseOp]]
    projector_phys: list[SparseOp]


def composite_ops(
    space: SpaceHandle, lambdas: Sequence[float], matter: SiteKind
) -> CompositeModelOps:
    layout = laser_layout(space, matter)
    phi = radiation_field(layout.N, lambdas, space)
    if matter is not SiteKind.FERMION_PAIR:
        return CompositeModelOps(phi=phi, sigma_from_fermions=[], projector_phys=[])
    return CompositeModelOps(
        phi=phi,
        sigma_from_fermions=[spin_from_fermions(s, space) for s in layout.atom_sites],
        projector_phys=[projector_phys(s, space) for s in layout.atom_sites],
    )
