"""Unit tests for time evolution, steady states and presets."""

import numpy as np
import pytest
from scipy import sparse

from laser_sl.core.exceptions import (
    DegenerateKernelError,
    PictureMismatchError,
    SpaceMismatchError,
    ValidationError,
)
from laser_sl.dynamics import (
    Trajectory,
    evolve,
    heisenberg_expectations,
    initial_state,
    observable,
    observables,
    steady_state,
)
from laser_sl.generators import (
    ASParams,
    Picture,
    Superoperator,
    build_as_generator,
    hamiltonian_term,
    radiation_generator,
    to_schrodinger,
)
from laser_sl.operators import (
    Site,
    SiteKind,
    SparseOp,
    SpaceHandle,
    boson,
    single_site_space,
    trace,
)
from tests.conftest import laser_space

T_GRID = np.linspace(0.0, 2.0, 11)


def _x_polarized(space: SpaceHandle) -> SparseOp:
    """(I + sigma_x) / 2 on the atom, vacuum on the mode."""
    atom = np.full((2, 2), 0.5, dtype=np.complex128)
    vacuum = np.zeros((space.dimension // 2, space.dimension // 2), dtype=np.complex128)
    vacuum[0, 0] = 1.0
    return SparseOp(space, sparse.csr_matrix(np.kron(atom, vacuum)), True)


class TestEvolve:
    """Tests for Schrodinger-picture evolution."""

    def test_population_relaxation(self, as_params: ASParams, spin_space: SpaceHandle) -> None:
        """Test <s_z>(t) = eta + (-1 - eta) exp(-gamma2 t) from the lower level."""
        p = as_params.with_updates(lambdas=(0.0,))
        L = to_schrodinger(build_as_generator(p, spin_space))
        ops = observables(["sz[0]"], spin_space)
        traj = evolve(L, initial_state("down", spin_space), T_GRID, observables=ops)
        expected = p.eta + (-1.0 - p.eta) * np.exp(-p.gamma2 * T_GRID)
        assert np.allclose(traj["sz[0]"].real, expected, atol=1e-8)
        assert np.allclose(traj["sz[0]"].imag, 0.0, atol=1e-10)

    def test_coherence_decay(self, as_params: ASParams, spin_space: SpaceHandle) -> None:
        """Test <s_+>(t) = exp(-(gamma1 - i epsilon) t) / 2 for an x-polarized atom."""
        p = as_params.with_updates(lambdas=(0.0,))
        L = to_schrodinger(build_as_generator(p, spin_space))
        traj = evolve(
            L, _x_polarized(spin_space), T_GRID, observables=observables(["sp[0]"], spin_space)
        )
        expected = 0.5 * np.exp(-(p.gamma1 - 1j * p.epsilon) * T_GRID)
        assert np.allclose(traj["sp[0]"], expected, atol=1e-8)

    def test_error_shrinks_with_tolerance(
        self, as_params: ASParams, spin_space: SpaceHandle
    ) -> None:
        """Test that halving the tolerance repeatedly brings <s_+> closer to its closed form."""
        p = as_params.with_updates(epsilon=20.0, gamma1=3.0, gamma2=4.0, lambdas=(0.0,))
        L = to_schrodinger(build_as_generator(p, spin_space))
        grid = [0.0, 1.0]
        exact = 0.5 * np.exp(-(p.gamma1 - 1j * p.epsilon) * 1.0)
        errors: list[float] = []
        for halvings in (0, 10, 20):
            tol = 1e-3 * 2.0**-halvings
            ops = observables(["sp[0]"], spin_space)
            traj = evolve(L, _x_polarized(spin_space), grid, tol, observables=ops)
            errors.append(abs(traj["sp[0]"][-1] - exact))
        assert errors[1] < errors[0]
        assert errors[2] < errors[1]

    def test_monitors(self, as_params: ASParams, spin_space: SpaceHandle) -> None:
        """Test trace, hermiticity and positivity monitors with the field coupled."""
        L = to_schrodinger(build_as_generator(as_params, spin_space))
        traj = evolve(L, initial_state("down", spin_space), T_GRID)
        assert traj.trace_dev.max() <= 1e-10
        assert traj.herm_dev.max() <= 1e-12
        assert traj.min_eig.min() >= -1e-8
        assert traj.stats

    def test_pictures_agree(self, as_params: ASParams, spin_space: SpaceHandle) -> None:
        """Test that Heisenberg and Schrodinger expectations coincide."""
        L = build_as_generator(as_params, spin_space)
        ops = observables(["sz[0]", "sp[0]", "n[0]"], spin_space)
        rho0 = _x_polarized(spin_space)
        schr = evolve(to_schrodinger(L), rho0, T_GRID, observables=ops)
        heis = heisenberg_expectations(L, ops, rho0, T_GRID)
        assert np.allclose(schr.values, heis.values, atol=1e-7)
        assert heis.trace_dev.max() <= 1e-10

    def test_picture_guards(self, as_params: ASParams, spin_space: SpaceHandle) -> None:
        """Test that each integrator refuses the other picture."""
        L = build_as_generator(as_params, spin_space)
        rho0 = initial_state("down", spin_space)
        with pytest.raises(PictureMismatchError):
            evolve(L, rho0, T_GRID)
        with pytest.raises(PictureMismatchError):
            heisenberg_expectations(to_schrodinger(L), {}, rho0, T_GRID)

    def test_bad_grid(self, as_params: ASParams, spin_space: SpaceHandle) -> None:
        """Test that a non-increasing grid is rejected."""
        L = to_schrodinger(build_as_generator(as_params, spin_space))
        with pytest.raises(ValidationError):
            evolve(L, initial_state("down", spin_space), [0.0, 1.0, 1.0])

    def test_bad_state(self, as_params: ASParams, spin_space: SpaceHandle) -> None:
        """Test that an unnormalized state is rejected."""
        L = to_schrodinger(build_as_generator(as_params, spin_space))
        rho0 = initial_state("down", spin_space) * 2.0
        with pytest.raises(ValidationError):
            evolve(L, rho0, T_GRID)

    def test_space_mismatch(self, as_params: ASParams, spin_space: SpaceHandle) -> None:
        """Test that the state must live on the generator's space."""
        L = to_schrodinger(build_as_generator(as_params, spin_space))
        with pytest.raises(SpaceMismatchError):
            evolve(L, initial_state("down", laser_space(cutoff=2)), T_GRID)


class TestSteadyState:
    """Tests for steady_state."""

    def test_decoupled_atom(self, as_params: ASParams, spin_space: SpaceHandle) -> None:
        """Test <s_z> = eta and unit trace for a decoupled atom."""
        L = to_schrodinger(build_as_generator(as_params.with_updates(lambdas=(0.0,)), spin_space))
        rho = steady_state(L)
        sz = observable("sz[0]", spin_space)
        assert trace(rho) == pytest.approx(1.0)
        assert trace(rho @ sz).real == pytest.approx(as_params.eta, abs=1e-10)

    def test_damped_mode_vacuum(self) -> None:
        """Test that a single damped mode relaxes to the vacuum."""
        space = single_site_space(Site(kind=SiteKind.BOSON, cutoff=3))
        L = Superoperator(
            space=space,
            picture=Picture.HEISENBERG,
            matrix=radiation_generator(5.0, 0.3, 0, space),
        )
        rho = steady_state(to_schrodinger(L)).to_dense()
        vacuum = np.zeros((4, 4), dtype=np.complex128)
        vacuum[0, 0] = 1.0
        assert np.abs(rho - vacuum).max() <= 1e-10

    def test_degenerate_kernel(self) -> None:
        """Test that a purely Hamiltonian map has no unique steady state."""
        space = single_site_space(Site(kind=SiteKind.BOSON, cutoff=3))
        number = boson("number", 0, space)
        L = Superoperator(space=space, picture=Picture.SCHRODINGER, matrix=hamiltonian_term(number))
        with pytest.raises(DegenerateKernelError) as exc_info:
            steady_state(L)
        assert exc_info.value.details["dimension"] == 4

    def test_needs_schrodinger(self, as_params: ASParams, spin_space: SpaceHandle) -> None:
        """Test that a Heisenberg generator is refused."""
        with pytest.raises(PictureMismatchError):
            steady_state(build_as_generator(as_params, spin_space))


class TestPresets:
    """Tests for initial states and observable names."""

    @pytest.mark.parametrize("preset", ["down", "up", "mixed"])
    def test_states_are_normalized(self, preset: str, spin_space: SpaceHandle) -> None:
        """Test unit trace of every preset."""
        assert trace(initial_state(preset, spin_space)) == pytest.approx(1.0)

    def test_level_populations(self, spin_space: SpaceHandle) -> None:
        """Test <s_z> = -1 in the lower and +1 in the upper level."""
        sz = observable("sz[0]", spin_space)
        assert trace(initial_state("down", spin_space) @ sz).real == pytest.approx(-1.0)
        assert trace(initial_state("up", spin_space) @ sz).real == pytest.approx(1.0)

    def test_fermion_levels(self) -> None:
        """Test the lower level of a two-level molecule."""
        space = laser_space(cutoff=1, matter=SiteKind.FERMION_PAIR)
        sz = observable("sz[0]", space)
        assert trace(initial_state("down", space) @ sz).real == pytest.approx(-1.0)

    def test_unknown_preset(self, spin_space: SpaceHandle) -> None:
        """Test that an unknown preset is rejected."""
        with pytest.raises(ValidationError):
            initial_state("sideways", spin_space)

    @pytest.mark.parametrize("name", ["sz[1]", "a[1]", "bogus"])
    def test_bad_observables(self, name: str, spin_space: SpaceHandle) -> None:
        """Test out-of-range indices and unknown names."""
        with pytest.raises(ValidationError):
            observable(name, spin_space)


class TestTrajectory:
    """Tests for the trajectory container."""

    def test_csv_header(self) -> None:
        """Test the column layout of the CSV output."""
        traj = Trajectory(
            times=np.array([0.0, 1.0]),
            names=["sz[0]"],
            values=np.array([[-1.0], [0.5 + 0.25j]]),
            trace_dev=np.zeros(2),
            herm_dev=np.zeros(2),
            min_eig=np.zeros(2),
        )
        lines = traj.csv().splitlines()
        assert lines[0] == "t,sz[0].re,sz[0].im,trace_dev,herm_dev,min_eig"
        assert len(lines) == 3

    def test_shape_check(self) -> None:
        """Test that values must match times and names."""
        with pytest.raises(ValueError):
            Trajectory(
                times=np.array([0.0]),
                names=["a", "b"],
                values=np.zeros((1, 1), dtype=np.complex128),
                trace_dev=np.zeros(1),
                herm_dev=np.zeros(1),
                min_eig=np.zeros(1),
            )
