"""Unit tests for spaces, local operators and composite operators."""

import numpy as np
import pytest
from scipy import sparse

from laser_sl.core.exceptions import (
    DimensionCapError,
    HermiticityError,
    ParamMismatchError,
    SiteMismatchError,
    SpaceMismatchError,
)
from laser_sl.operators import (
    HilbertSpec,
    Site,
    SiteKind,
    SparseOp,
    anticommutator,
    boson,
    build_space,
    commutator,
    composite_ops,
    fermion,
    frobenius_norm,
    laser_layout,
    max_abs,
    pauli,
    projector_phys,
    radiation_field,
    spin_from_fermions,
    trace,
)
from laser_sl.operators.space import SpaceHandle
from tests.conftest import laser_space


def dense(op: SparseOp) -> np.ndarray:
    return op.to_dense()


class TestHilbertSpec:
    """Tests for HilbertSpec and build_space."""

    def test_laser_layout_dimension(self) -> None:
        """Test that 3 atoms and one mode with cutoff 2 give d = 24."""
        spec = HilbertSpec.laser(n_atoms=3, n_modes=1, cutoff=2)
        assert spec.dimension == 24
        space = build_space(spec)
        assert space.dims == (2, 2, 2, 3)

    def test_fermion_sites_have_dimension_four(self) -> None:
        """Test fermion pair sites."""
        spec = HilbertSpec.laser(1, 1, 1, matter=SiteKind.FERMION_PAIR)
        assert spec.dimension == 8

    def test_dimension_cap(self) -> None:
        """Test that exceeding the cap raises DimensionCapError."""
        spec = HilbertSpec.laser(n_atoms=5, n_modes=1, cutoff=3)
        with pytest.raises(DimensionCapError):
            build_space(spec, cap=64)

    def test_boson_needs_cutoff(self) -> None:
        """Test that a boson site without cutoff is rejected."""
        with pytest.raises(ValueError):
            Site(kind=SiteKind.BOSON)

    def test_spin_rejects_cutoff(self) -> None:
        """Test that a spin site with a cutoff is rejected."""
        with pytest.raises(ValueError):
            Site(kind=SiteKind.SPIN, cutoff=2)

    def test_require_wrong_kind(self, spin_space: SpaceHandle) -> None:
        """Test that require reports a site of the wrong kind."""
        with pytest.raises(SiteMismatchError):
            spin_space.require(1, SiteKind.SPIN)

    def test_identity_is_cached(self, spin_space: SpaceHandle) -> None:
        """Test that the identity operator is built once."""
        assert spin_space.identity is spin_space.identity
        assert trace(spin_space.identity) == 8


class TestSparseOp:
    """Tests for SparseOp."""

    def test_hermitian_hint_is_checked(self, spin_space: SpaceHandle) -> None:
        """Test that a non-hermitian matrix flagged hermitian raises."""
        sigma_plus = pauli("+", 0, spin_space)
        with pytest.raises(HermiticityError):
            SparseOp(spin_space, sigma_plus.matrix, True)

    def test_shape_must_match(self, spin_space: SpaceHandle) -> None:
        """Test that a wrongly sized matrix is rejected."""
        with pytest.raises(SpaceMismatchError):
            SparseOp(spin_space, sparse.identity(3, format="csr"))

    def test_arithmetic(self, spin_space: SpaceHandle) -> None:
        """Test sum, product, scaling and adjoint."""
        sx = pauli("x", 0, spin_space)
        sy = pauli("y", 0, spin_space)
        sp = pauli("+", 0, spin_space)
        assert max_abs((sx + sy * 1j) * 0.5 - sp) == 0.0
        assert max_abs(sp.adjoint() - pauli("-", 0, spin_space)) == 0.0
        assert max_abs(sx @ sx - spin_space.identity) == 0.0

    def test_operations_across_spaces_fail(self, spin_space: SpaceHandle) -> None:
        """Test that operators on different spaces do not combine."""
        other = laser_space(cutoff=2)
        with pytest.raises(SpaceMismatchError):
            _ = pauli("z", 0, spin_space) + pauli("z", 0, other)

    def test_frobenius_norm(self, spin_space: SpaceHandle) -> None:
        """Test ||sigma_z||_F = sqrt(d)."""
        assert frobenius_norm(pauli("z", 0, spin_space)) == pytest.approx(np.sqrt(8))


class TestLocalOperators:
    """Tests for Pauli, boson and fermion operators."""

    def test_pauli_commutator(self, spin_space: SpaceHandle) -> None:
        """Test [sigma_+, sigma_-] = sigma_z."""
        sp = pauli("+", 0, spin_space)
        sm = pauli("-", 0, spin_space)
        assert max_abs(commutator(sp, sm) - pauli("z", 0, spin_space)) == 0.0

    def test_pauli_on_boson_site_fails(self, spin_space: SpaceHandle) -> None:
        """Test that a Pauli operator on a mode site is rejected."""
        with pytest.raises(SiteMismatchError):
            pauli("z", 1, spin_space)

    def test_boson_commutator_below_cutoff(self, spin_space: SpaceHandle) -> None:
        """Test [a, a^dag] = 1 on every level below the cutoff."""
        a = boson("annihilate", 1, spin_space)
        diag = np.real(np.diag(dense(commutator(a, a.adjoint()))))
        local = diag.reshape(2, 4)
        assert np.allclose(local[:, :3], 1.0)
        assert np.allclose(local[:, 3], -3.0)

    def test_number_operator(self, spin_space: SpaceHandle) -> None:
        """Test N = a^dag a."""
        a = boson("annihilate", 1, spin_space)
        number = boson("number", 1, spin_space)
        assert max_abs(a.adjoint() @ a - number) < 1e-15

    def test_fermion_anticommutation(self, fermion_space: SpaceHandle) -> None:
        """Test the canonical anticommutation relations of b_+ and b_-."""
        bp = fermion("+", "annihilate", 0, fermion_space)
        bm = fermion("-", "annihilate", 0, fermion_space)
        one = fermion_space.identity
        assert max_abs(anticommutator(bp, bp.adjoint()) - one) == 0.0
        assert max_abs(anticommutator(bm, bm.adjoint()) - one) == 0.0
        assert max_abs(anticommutator(bp, bm)) == 0.0
        assert max_abs(anticommutator(bp, bm.adjoint())) == 0.0
        assert max_abs(bp @ bp) == 0.0

    def test_fermion_create_is_adjoint(self, fermion_space: SpaceHandle) -> None:
        """Test that create equals the adjoint of annihilate."""
        bp = fermion("+", "annihilate", 0, fermion_space)
        assert max_abs(fermion("+", "create", 0, fermion_space) - bp.adjoint()) == 0.0


class TestCompositeOperators:
    """Tests for the radiation field and fermion-built spin operators."""

    def test_single_site_field(self, spin_space: SpaceHandle) -> None:
        """Test phi_0 = -i lambda a for N = 0, n = 1."""
        (phi,) = radiation_field(0, [0.4], spin_space)
        a = boson("annihilate", 1, spin_space)
        assert max_abs(phi - a * (-0.4j)) < 1e-15

    def test_field_normalization(self) -> None:
        """Test that every phi_r carries the 1/sqrt(2N+1) factor."""
        space = laser_space(N=1, n=1, cutoff=1)
        fields = radiation_field(1, [1.0], space)
        a = boson("annihilate", 3, space)
        assert len(fields) == 3
        for phi in fields:
            assert max_abs(phi - a * (-1j / np.sqrt(3))) < 1e-15

    def test_field_coupling_count(self, spin_space: SpaceHandle) -> None:
        """Test that the coupling count must equal the mode count."""
        with pytest.raises(ParamMismatchError):
            radiation_field(0, [0.1, 0.2], spin_space)

    def test_layout(self) -> None:
        """Test the atom and mode sites of a laser layout."""
        space = laser_space(N=1, n=2, cutoff=1)
        layout = laser_layout(space, SiteKind.SPIN)
        assert (layout.N, layout.n) == (1, 2)
        assert layout.atom(-1) == 0
        assert layout.mode_sites == (3, 4)

    def test_layout_rejects_even_atom_count(self) -> None:
        """Test that an even number of atoms is not a laser layout."""
        space = build_space(HilbertSpec.laser(2, 1, 1))
        with pytest.raises(SpaceMismatchError):
            laser_layout(space, SiteKind.SPIN)

    def test_spin_algebra_from_fermions(self, fermion_space: SpaceHandle) -> None:
        """Test [s_+, s_-] = s_z for s_+ = b_+^dag b_-."""
        sp, sm, sz = spin_from_fermions(0, fermion_space)
        assert max_abs(commutator(sp, sm) - sz) == 0.0
        assert max_abs(sp.adjoint() - sm) == 0.0

    def test_projector_phys(self, fermion_space: SpaceHandle) -> None:
        """Test that the one-electron projector is idempotent with rank 2 per mode level."""
        p = projector_phys(0, fermion_space)
        assert max_abs(p @ p - p) == 0.0
        assert trace(p) == pytest.approx(4.0)

    def test_composite_ops_spin_layout(self) -> None:
        """Test that spin layouts carry the field only."""
        space = laser_space(N=1, n=2, cutoff=1)
        ops = composite_ops(space, [0.2, 0.3], SiteKind.SPIN)
        expected = radiation_field(1, [0.2, 0.3], space)
        assert len(ops.phi) == 3
        assert all(max_abs(a - b) == 0.0 for a, b in zip(ops.phi, expected))
        assert ops.sigma_from_fermions == []
        assert ops.projector_phys == []

    def test_composite_ops_fermion_layout(self) -> None:
        """Test the Pauli relations of the fermion-built spins on the one-electron range."""
        space = laser_space(N=1, n=1, cutoff=1, matter=SiteKind.FERMION_PAIR)
        ops = composite_ops(space, [0.5], SiteKind.FERMION_PAIR)
        assert len(ops.sigma_from_fermions) == len(ops.projector_phys) == 3
        for (sp, sm, sz), p in zip(ops.sigma_from_fermions, ops.projector_phys):
            assert max_abs(p @ (sz @ sz) @ p - p) < 1e-15
            assert max_abs(p @ anticommutator(sp, sm) @ p - p) < 1e-15
            assert max_abs(p @ (sp @ sp) @ p) == 0.0
