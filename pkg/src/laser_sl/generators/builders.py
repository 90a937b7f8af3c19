"""Builders of the AS, HL-SL and DHL-SL generators (Heisenberg picture).

Every builder returns the total map together with three blocks:

    L1: radiation (mode damping and frequencies),
    L2: matter (per-site damping, pumping and level shift),
    L3: coupling i[H_int, .] with H_int = sum_r (phi_r s_r^+ + h.c.).

For AS the blocks are L_rad, L_mat and i[H_int, .]; for the SL generators they are
the three groups of reservoir terms. Block-wise comparison between models is
therefore meaningful whenever the spaces agree.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any

import numpy as np
from scipy import sparse

from laser_sl.core.exceptions import ParamMismatchError, SpaceMismatchError, ValidationError
from laser_sl.generators.params import ASParams
from laser_sl.generators.superoperator import (
    Picture,
    Superoperator,
    hamiltonian_term,
    left,
    lindblad_term,
    right,
    sandwich,
    sl_term,
)
from laser_sl.operators.algebra import SparseOp, total
from laser_sl.operators.composite import (
    LaserLayout,
    composite_ops,
    laser_layout,
)
from laser_sl.operators.local import MINUS, PLUS, boson, fermion, pauli
from laser_sl.operators.space import Site, SiteKind, SpaceHandle, single_site_space
from laser_sl.reservoir.gamma_sets import GammaSet, ModelKind

logger = logging.getLogger(__name__)


def _zero(space: SpaceHandle) -> sparse.csr_matrix:
    d2 = space.dimension**2
    return sparse.csr_matrix((d2, d2), dtype=np.complex128)


def _assemble(
    space: SpaceHandle, blocks: dict[str, sparse.csr_matrix], provenance: dict[str, Any]
) -> Superoperator:
    matrix = _zero(space)
    for block in blocks.values():
        matrix = matrix + block
    L = Superoperator(
        space=space,
        picture=Picture.HEISENBERG,
        matrix=matrix,
        provenance=provenance,
        blocks=blocks,
    )
    logger.info(
        "Built %s generator: d=%d, d^2=%d, nnz=%d",
        provenance.get("model"),
        space.dimension,
        space.dimension**2,
        L.nnz,
    )
    return L


def _check_layout(layout: LaserLayout, N: int | None, n: int, what: str) -> None:
    if N is not None and layout.N != N:
        raise SpaceMismatchError(
            f"{what}: space holds 2N+1 = {2 * layout.N + 1} atoms but N = {N}",
            details={"space_N": layout.N, "N": N},
        )
    if layout.n != n:
        raise SpaceMismatchError(
            f"{what}: space holds {layout.n} modes but {n} were given",
            details={"space_n": layout.n, "n": n},
        )


# === Single-site pieces ===


def atom_generator(
    epsilon: float, gamma1: float, gamma2: float, eta: float, site: int, space: SpaceHandle
) -> sparse.csr_matrix:
    """AS matter generator of one spin site.

    Realized as a GKSL form with jumps s^- at rate gamma2 (1 - eta) / 2, s^+ at
    rate gamma2 (1 + eta) / 2, dephasing s_z at rate (gamma1 - gamma2 / 2) / 2 and
    Hamiltonian (epsilon / 2) s_z, which gives

        L s^{+-} = -(gamma1 -+ i epsilon) s^{+-},   L s_z = -gamma2 (s_z - eta I).
    """
    sigma_minus = pauli("-", site, space)
    sigma_plus = pauli("+", site, space)
    sigma_z = pauli("z", site, space)
    return sparse.csr_matrix(
        lindblad_term(sigma_minus, gamma2 * (1.0 - eta) / 2.0)
        + lindblad_term(sigma_plus, gamma2 * (1.0 + eta) / 2.0)
        + lindblad_term(sigma_z, (gamma1 - gamma2 / 2.0) / 2.0)
        + hamiltonian_term(sigma_z * (epsilon / 2.0))
    )


def radiation_generator(
    omega: float, kappa: float, mode_site: int, space: SpaceHandle
) -> sparse.csr_matrix:
    """Damped-mode generator, taken verbatim as a Heisenberg map.

    L(X) = i omega [N, X] + 2 kappa a^dag X a - kappa {N, X}, so that
    L(a) = -(kappa + i omega) a and L(N) = -2 kappa N even under truncation.
    """
    a = boson("annihilate", mode_site, space)
    number = boson("number", mode_site, space)
    return sparse.csr_matrix(
        1j * omega * (left(number) - right(number))
        + 2.0 * kappa * sandwich(a.adjoint(), a)
        - kappa * (left(number) + right(number))
    )


def _interaction(
    layout: LaserLayout, lambdas: Sequence[float], space: SpaceHandle
) -> sparse.csr_matrix:
    ops = composite_ops(space, lambdas, layout.matter)
    terms: list[SparseOp] = []
    for index, site in enumerate(layout.atom_sites):
        if layout.matter is SiteKind.SPIN:
            raising = pauli("+", site, space)
        else:
            raising = ops.sigma_from_fermions[index][0]
        coupling = ops.phi[index] @ raising
        terms.append(coupling + coupling.adjoint())
    h_int = total(terms, space)
    return hamiltonian_term(h_int)



def _radiation_sl(
    gammas: Sequence[complex], layout: LaserLayout, space: SpaceHandle
) -> sparse.csr_matrix:
    block = _zero(space)
    for gamma, mode_site in zip(gammas, layout.mode_sites):
        a = boson("annihilate", mode_site, space)
        block = block + sl_term(a.adjoint(), a, gamma)
    return block


# === AS ===


def build_as_generator(p: ASParams, space: SpaceHandle) -> Superoperator:
    """Dissipative AS generator L = L_mat + L_rad + i[H_int, .].

    Raises:
        SpaceMismatchError: If the space is not [spin x (2N+1), boson x n].
        ParamInvariantViolation: If the physical bounds on the parameters fail.
    """
    p.check_bounds()
    layout = laser_layout(space, SiteKind.SPIN)
    _check_layout(layout, p.N, p.n, "AS generator")

    matter = _zero(space)
    for site in layout.atom_sites:
        matter = matter + atom_generator(p.epsilon, p.gamma1, p.gamma2, p.eta, site, space)
    radiation = _zero(space)
    for omega, kappa, mode_site in zip(p.omega, p.kappa, layout.mode_sites):
        radiation = radiation + radiation_generator(omega, kappa, mode_site, space)
    blocks = {
        "L1": radiation,
        "L2": matter,
        "L3": _interaction(layout, p.lambdas, space),
    }
    return _assemble(space, blocks, {"model": ModelKind.AS.value, "params": p.model_dump()})


# === HL-SL ===


def _require_model(g: GammaSet, model: ModelKind) -> None:
    if g.model is not model:
        raise ValidationError(
            f"Expected a {model.value} gamma set, got {g.model.value}", field="gammas"
        )


def _sl_layout(
    g: GammaSet, lambdas: Sequence[float], space: SpaceHandle, matter: SiteKind
) -> LaserLayout:
    layout = laser_layout(space, matter)
    _check_layout(layout, None, g.n, f"{g.model.value}-SL generator")
    if len(lambdas) != layout.n:
        raise ParamMismatchError("lambdas", layout.n, len(lambdas))
    return layout


def _gamma_snapshot(g: GammaSet) -> dict[str, list[float]]:
    return {name: [g[name].real, g[name].imag] for name in g.names()}


def _hl_matter(
    h1: complex, h2: complex, layout: LaserLayout, space: SpaceHandle
) -> sparse.csr_matrix:
    block = _zero(space)
    for site in layout.atom_sites:
        sigma_plus = pauli("+", site, space)
        sigma_minus = pauli("-", site, space)
        block = block + sl_term(sigma_plus, sigma_minus, h1)
        block = block + sl_term(sigma_minus, sigma_plus, h2)
    return block


def build_hlsl_generator(
    g: GammaSet, lambdas: Sequence[float], space: SpaceHandle
) -> Superoperator:
    """Stochastic-limit generator of the HL model in the rotating-wave form.

    L1 = sum_j Gamma_j^(g) [a_j^dag, X] a_j - h.c.-ordered partner,
    L2 = sum_r Gamma^(h1) [s^+, X] s^- + Gamma^(h2) [s^-, X] s^+ with partners,
    L3 = i[sum_r (phi_r s_r^+ + h.c.), X].

    Raises:
        SpaceMismatchError: If the space is not [spin x (2N+1), boson x n].
    """
    _require_model(g, ModelKind.HL)
    layout = _sl_layout(g, lambdas, space, SiteKind.SPIN)
    blocks = {
        "L1": _radiation_sl(g.radiation, layout, space),
        "L2": _hl_matter(g["h1"], g["h2"], layout, space),
        "L3": _interaction(layout, lambdas, space),
    }
    provenance = {
        "model": ModelKind.HL.value,
        "gammas": _gamma_snapshot(g),
        "lambdas": list(lambdas),
    }
    return _assemble(space, blocks, provenance)


def build_single_reservoir_generator(
    g: GammaSet, lambdas: Sequence[float], space: SpaceHandle
) -> Superoperator:
    """HL-SL generator with the matter coupled to one reservoir only.

    Only the h1 channel is kept (Gamma^(h2) = 0): the matter part is then the AS
    matter generator with eta = -1, pure decay toward the lower level.
    """
    _require_model(g, ModelKind.HL)
    if g["h2"] != 0:
        logger.warning("Single-reservoir generator ignores Gamma[h2] = %s", g["h2"])
    layout = _sl_layout(g, lambdas, space, SiteKind.SPIN)
    blocks = {
        "L1": _radiation_sl(g.radiation, layout, space),
        "L2": _hl_matter(g["h1"], 0j, layout, space),
        "L3": _interaction(layout, lambdas, space),
    }
    provenance = {
        "model": "HL-single",
        "gammas": _gamma_snapshot(g),
        "lambdas": list(lambdas),
    }
    return _assemble(space, blocks, provenance)


# === DHL-SL ===


def dhl_matter_generator(g: GammaSet, site: int, space: SpaceHandle) -> sparse.csr_matrix:
    """Eight-term fermionic matter generator of one site.

    B channels act as Gamma [b^dag, X] b - conj(Gamma) b^dag [b, X] (dissipation),
    C channels with the roles of b and b^dag swapped (pump).
    """
    b_plus = fermion("+", "annihilate", site, space)
    b_minus = fermion("-", "annihilate", site, space)
    return sparse.csr_matrix(
        sl_term(b_plus.adjoint(), b_plus, g["B+"])
        + sl_term(b_minus.adjoint(), b_minus, g["B-"])
        + sl_term(b_plus, b_plus.adjoint(), g["C+"])
        + sl_term(b_minus, b_minus.adjoint(), g["C-"])
    )


def build_dhlsl_generator(
    g: GammaSet, lambdas: Sequence[float], space: SpaceHandle
) -> Superoperator:
    """Stochastic-limit generator of the DHL model.

    L3 couples the field to s_r^+ = b_{+,r}^dag b_{-,r}.

    Raises:
        SpaceMismatchError: If the space is not [fermion_pair x (2N+1), boson x n].
    """
    _require_model(g, ModelKind.DHL)
    layout = _sl_layout(g, lambdas, space, SiteKind.FERMION_PAIR)
    matter = _zero(space)
    for site in layout.atom_sites:
        matter = matter + dhl_matter_generator(g, site, space)
    blocks = {
        "L1": _radiation_sl(g.radiation, layout, space),
        "L2": matter,
        "L3": _interaction(layout, lambdas, space),
    }
    provenance = {
        "model": ModelKind.DHL.value,
        "gammas": _gamma_snapshot(g),
        "lambdas": list(lambdas),
    }
    return _assemble(space, blocks, provenance)


def spin_mapped_dhl_matter(g: GammaSet) -> sparse.csr_matrix:
    """DHL matter generator of one site seen through the one-electron subspace.

    With V the isometry |e> -> |+>, |g> -> |-> and P = V V^dag, the unital lift
    X -> V X V^dag + tr(X) (I - P) / 2 is applied before L2 and V^dag . V after it.
    The result is a 4 x 4 superoperator on a single spin.
    """
    _require_model(g, ModelKind.DHL)
    space = single_site_space(Site(kind=SiteKind.FERMION_PAIR))
    l2 = dhl_matter_generator(g, 0, space).toarray()
    v = np.zeros((4, 2), dtype=np.complex128)
    v[PLUS, 0] = 1.0
    v[MINUS, 1] = 1.0
    unphysical = np.eye(4, dtype=np.complex128) - v @ v.conj().T
    lift = np.kron(v.conj(), v) + 0.5 * np.outer(
        unphysical.reshape(-1, order="F"), np.eye(2, dtype=np.complex128).reshape(-1, order="F")
    )
    restrict = np.kron(v.T, v.conj().T)
    return sparse.csr_matrix(restrict @ l2 @ lift)
