"""Unit tests for the Kossakowski complete-positivity check."""

import numpy as np
import pytest
from scipy import sparse

from laser_sl.core.exceptions import DecompositionFailure, ValidationError
from laser_sl.core.settings import Settings
from laser_sl.generators import (
    ASParams,
    Picture,
    Superoperator,
    build_as_generator,
    build_dhlsl_generator,
    build_hlsl_generator,
    coefficient_matrix,
    kossakowski_check,
    left,
    to_schrodinger,
)
from laser_sl.operators import SpaceHandle, pauli
from laser_sl.reservoir import GammaSet
from tests.conftest import laser_space


class TestKossakowskiCheck:
    """Tests for kossakowski_check."""

    def test_as_generator_is_cp(self, as_params: ASParams, spin_space: SpaceHandle) -> None:
        """Test that a physical AS generator passes."""
        report = kossakowski_check(build_as_generator(as_params, spin_space))
        assert report.min_eigenvalue >= -1e-10
        assert report.completely_positive

    def test_pictures_agree(self, as_params: ASParams, spin_space: SpaceHandle) -> None:
        """Test that both pictures give the same spectrum."""
        L = build_as_generator(as_params, spin_space)
        a = kossakowski_check(L)
        b = kossakowski_check(to_schrodinger(L))
        assert np.allclose(a.eigenvalues, b.eigenvalues)

    def test_hl_targets_are_cp(self, hl_targets: GammaSet, spin_space: SpaceHandle) -> None:
        """Test the HL-SL generator with positive real parts."""
        L = build_hlsl_generator(hl_targets, (0.4,), spin_space)
        assert kossakowski_check(L).completely_positive

    def test_dhl_is_cp(self, balanced_dhl: GammaSet, fermion_space: SpaceHandle) -> None:
        """Test the DHL-SL generator with positive real parts."""
        report = kossakowski_check(build_dhlsl_generator(balanced_dhl, (0.3,), fermion_space))
        assert report.min_eigenvalue >= -1e-10

    def test_negative_rate_is_detected(self, spin_space: SpaceHandle) -> None:
        """Test that a sign-flipped Re Gamma_h1 gives a negative eigenvalue."""
        g = GammaSet.hl(radiation=[0.3 + 5.0j], h1=-0.5 + 0.1j, h2=0.25)
        report = kossakowski_check(build_hlsl_generator(g, (0.4,), spin_space))
        assert report.min_eigenvalue <= -1e-3
        assert not report.completely_positive

    def test_zero_generator(self) -> None:
        """Test that the zero map has a zero coefficient matrix."""
        space = laser_space(cutoff=1)
        d2 = space.dimension**2
        L = Superoperator(space, Picture.HEISENBERG, sparse.csr_matrix((d2, d2), dtype=complex))
        assert np.abs(coefficient_matrix(L)).max() == 0.0
        assert kossakowski_check(L).min_eigenvalue == 0.0

    def test_non_hermitian_map_fails(self, spin_space: SpaceHandle) -> None:
        """Test that a map without hermiticity preservation has no decomposition."""
        sp = pauli("+", 0, spin_space)
        L = Superoperator(spin_space, Picture.HEISENBERG, sparse.csr_matrix(1j * left(sp)))
        with pytest.raises(DecompositionFailure):
            kossakowski_check(L)

    def test_dense_cap(self, as_params: ASParams, spin_space: SpaceHandle) -> None:
        """Test that the check refuses generators above the dense cap."""
        L = build_as_generator(as_params, spin_space)
        with pytest.raises(ValidationError):
            kossakowski_check(L, settings=Settings(_env_file=None, dense_cap=16))
