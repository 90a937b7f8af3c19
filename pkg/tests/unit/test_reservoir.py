"""Unit tests for spectral densities and Gamma_- coefficients."""

import logging
import math
from pathlib import Path

import numpy as np
import pydantic
import pytest

from laser_sl.core.exceptions import NoResonanceInSupport, ResonanceViolation, ValidationError
from laser_sl.reservoir import (
    DHLDensities,
    Detuning,
    ExponentConvention,
    FlatDensity,
    GammaSet,
    GaussianDensity,
    HLDensities,
    LorentzianDensity,
    ModelKind,
    SpectralDensity,
    SumDensity,
    TabulatedDensity,
    WeightedTerm,
    gamma_at_eps,
    gamma_closed_form,
    gamma_minus,
    gamma_minus_time_domain,
    gamma_set_dhl,
    gamma_set_hl,
    richardson,
    zero_density,
)


class TestSpectralDensities:
    """Tests for the density models."""

    def test_flat(self, flat_density: FlatDensity) -> None:
        """Test J0 inside the band and zero outside."""
        assert flat_density(4.5) == 1.0
        assert flat_density(5.5) == 0.0
        assert flat_density.support == (3.0, 5.0)

    def test_lorentzian(self) -> None:
        """Test the peak value and the half maximum."""
        density = LorentzianDensity(j0=2.0, center=1.0, width=0.5)
        assert density(1.0) == pytest.approx(2.0)
        assert density(1.5) == pytest.approx(1.0)
        assert density.support == (-math.inf, math.inf)

    def test_lorentzian_cutoff(self) -> None:
        """Test that a cutoff bounds the support."""
        density = LorentzianDensity(j0=1.0, center=0.0, width=1.0, cutoff=3.0)
        assert density.support == (-3.0, 3.0)
        assert density(3.5) == 0.0

    def test_tabulated_interpolation(self) -> None:
        """Test piecewise-linear interpolation."""
        density = TabulatedDensity(omega=(0.0, 1.0, 2.0), values=(0.0, 2.0, 0.0))
        assert density(0.5) == pytest.approx(1.0)
        assert density.support == (0.0, 2.0)

    def test_tabulated_needs_increasing_grid(self) -> None:
        """Test that a non-increasing grid is rejected."""
        with pytest.raises(pydantic.ValidationError):
            TabulatedDensity(omega=(0.0, 0.0, 1.0), values=(1.0, 1.0, 1.0))

    def test_tabulated_from_file(self, tmp_path: Path) -> None:
        """Test loading a two-column file."""
        path = tmp_path / "j.txt"
        path.write_text("0.0 1.0\n1.0 3.0\n", encoding="utf-8")
        density = TabulatedDensity.from_file(path)
        assert density(0.25) == pytest.approx(1.5)

    def test_sum(self, flat_density: FlatDensity) -> None:
        """Test a weighted sum and its combined support."""
        other = FlatDensity(j0=2.0, center=0.0, half_width=1.0)
        density = SumDensity(
            terms=(
                WeightedTerm(weight=0.5, density=flat_density),
                WeightedTerm(weight=1.0, density=other),
            )
        )
        assert density(4.0) == pytest.approx(0.5)
        assert density(0.0) == pytest.approx(2.0)
        assert density.support == (-1.0, 5.0)

    def test_discriminated_union(self) -> None:
        """Test that the form key selects the model."""
        adapter = pydantic.TypeAdapter(SpectralDensity)
        density = adapter.validate_python(
            {"form": "gaussian", "j0": 1.0, "center": 0.0, "sigma": 2.0}
        )
        assert isinstance(density, GaussianDensity)

    def test_zero_density(self) -> None:
        """Test the switched-off channel."""
        assert zero_density(3.0)(3.0) == 0.0


class TestRichardson:
    """Tests for the eps -> 0 extrapolation."""

    def test_exact_for_polynomials(self) -> None:
        """Test that a quadratic is extrapolated exactly from three points."""
        eps = [0.1, 0.05, 0.025]
        values = [complex(1 + 2 * e + 3 * e * e, -e) for e in eps]
        value, residual = richardson(eps, values)
        assert value == pytest.approx(1.0, abs=1e-12)
        assert residual >= 0.0


class TestGammaMinus:
    """Tests for gamma_minus."""

    def test_flat_centered(self, flat_density: FlatDensity) -> None:
        """Test Gamma = pi J0 at the band center."""
        coef = gamma_minus(flat_density, Detuning(1, 4.0))
        assert coef.value == pytest.approx(math.pi)
        assert coef.report.method == "closed_form"
        assert coef.resonant

    def test_flat_off_center_imaginary_part(self, flat_density: FlatDensity) -> None:
        """Test Im Gamma = J0 ln|(hi - r) / (lo - r)|."""
        value = gamma_closed_form(flat_density, Detuning(1, 3.5))
        assert value is not None
        assert value.real == pytest.approx(math.pi)
        assert value.imag == pytest.approx(math.log(3.0))
        flipped = gamma_closed_form(flat_density, Detuning(-1, 3.5))
        assert flipped is not None
        assert flipped.imag == pytest.approx(-math.log(3.0))

    @pytest.mark.parametrize("root", [4.0, 3.5])
    def test_flat_quadrature(self, flat_density: FlatDensity, root: float) -> None:
        """Test that the regularized quadrature reproduces the closed form."""
        exact = gamma_closed_form(flat_density, Detuning(1, root))
        assert exact is not None
        coef = gamma_minus(flat_density, Detuning(1, root), method="quadrature")
        assert coef.report.method == "quadrature"
        assert len(coef.report.values) == 7
        assert abs(coef.value - exact) <= 1e-6 * abs(exact)
        assert abs(coef.value.real - math.pi) <= 1e-6 * math.pi

    def test_lorentzian_quadrature(self) -> None:
        """Test the quadrature of a full-line Lorentzian against its closed form."""
        density = LorentzianDensity(j0=1.0, center=4.0, width=0.5)
        detuning = Detuning(1, 4.3)
        exact = gamma_closed_form(density, detuning)
        assert exact is not None
        coef = gamma_minus(density, detuning, method="quadrature")
        assert abs(coef.value - exact) <= 1e-6 * abs(exact)

    def test_lorentzian_time_domain(self) -> None:
        """Test the frequency-domain value against the damped time integral."""
        density = LorentzianDensity(j0=1.0, center=4.5, width=0.2)
        detuning = Detuning(1, 4.0)
        reference = gamma_minus(density, detuning).value
        oracle = gamma_minus_time_domain(density, detuning)
        assert abs(oracle - reference) <= 1e-6 * abs(reference)

    def test_linear_in_density(self, flat_density: FlatDensity) -> None:
        """Test Gamma(2 J1 + J2 / 2) = 2 Gamma(J1) + Gamma(J2) / 2 on the quadrature path."""
        second = LorentzianDensity(j0=1.0, center=4.5, width=0.2, cutoff=3.0)
        mixture = SumDensity(
            terms=(
                WeightedTerm(weight=2.0, density=flat_density),
                WeightedTerm(weight=0.5, density=second),
            )
        )
        detuning = Detuning(1, 4.3)
        parts = [
            gamma_minus(d, detuning, method="quadrature").value for d in (flat_density, second)
        ]
        combined = gamma_minus(mixture, detuning, method="quadrature").value
        expected = 2.0 * parts[0] + 0.5 * parts[1]
        assert abs(combined - expected) <= 1e-6 * abs(expected)

    def test_reversed_detuning_conjugates(self) -> None:
        """Test Gamma(-Delta) = conj(Gamma(Delta)) on the quadrature path."""
        density = LorentzianDensity(j0=1.0, center=4.5, width=0.2)
        forward = gamma_minus(density, Detuning(1, 4.0), method="quadrature").value
        backward = gamma_minus(density, Detuning(-1, 4.0), method="quadrature").value
        assert abs(backward - forward.conjugate()) <= 1e-8

    def test_extrapolation_approaches_monotonically(self) -> None:
        """Test that |Gamma(eps) - Gamma(0)| shrinks along the eps sequence."""
        density = LorentzianDensity(j0=1.0, center=4.5, width=0.2)
        report = gamma_minus(density, Detuning(1, 4.0), method="quadrature").report
        distances = [abs(v - report.extrapolated) for v in report.values]
        assert all(later < earlier for earlier, later in zip(distances, distances[1:]))

    def test_real_part_at_eps(self, flat_density: FlatDensity) -> None:
        """Test Re Gamma(eps) = 2 J0 arctan(1 / eps) at the band center."""
        value = gamma_at_eps(flat_density, Detuning(1, 4.0), 0.1)
        assert value.real == pytest.approx(2 * math.atan(10.0), rel=1e-10)
        assert value.imag == pytest.approx(0.0, abs=1e-10)

    def test_conjugate_convention(self, flat_density: FlatDensity) -> None:
        """Test that the opposite exponent sign conjugates the value."""
        canonical = gamma_minus(flat_density, Detuning(1, 3.5)).value
        conjugate = gamma_minus(
            flat_density, Detuning(1, 3.5), convention=ExponentConvention.CONJUGATE
        ).value
        assert conjugate == pytest.approx(canonical.conjugate())

    def test_no_resonance_is_reported(
        self, flat_density: FlatDensity, caplog: pytest.LogCaptureFixture
    ) -> None:
        """Test that a root outside the support is recorded, not raised."""
        with caplog.at_level(logging.WARNING):
            coef = gamma_minus(flat_density, Detuning(1, 8.0))
        assert not coef.resonant
        assert coef.value.real == 0.0
        assert coef.issues[0]["error"] == "NO_RESONANCE"
        assert "No resonance" in caplog.text

    def test_no_resonance_strict(self, flat_density: FlatDensity) -> None:
        """Test that strict mode raises NoResonanceInSupport."""
        with pytest.raises(NoResonanceInSupport):
            gamma_minus(flat_density, Detuning(1, 8.0), strict=True)

    def test_eps_sequence_validation(self, flat_density: FlatDensity) -> None:
        """Test that the eps sequence must be long and decreasing."""
        with pytest.raises(ValidationError):
            gamma_minus(flat_density, Detuning(1, 4.0), eps_seq=(0.1, 0.05))
        with pytest.raises(ValidationError):
            gamma_minus(flat_density, Detuning(1, 4.0), eps_seq=(0.1, 0.2, 0.05))

    def test_closed_form_unavailable(self) -> None:
        """Test that a Gaussian has no closed form."""
        density = GaussianDensity(j0=1.0, center=0.0, sigma=1.0)
        with pytest.raises(ValidationError):
            gamma_minus(density, Detuning(1, 0.0), method="closed_form")

    def test_detuning_sign(self) -> None:
        """Test that the detuning sign must be +1 or -1."""
        with pytest.raises(ValueError):
            Detuning(2, 0.0)


class TestGammaSets:
    """Tests for the HL and DHL coefficient sets."""

    def test_hl_set(self, flat_density: FlatDensity) -> None:
        """Test channel names and the h2 detuning at -omega_R."""
        pump_up = LorentzianDensity(j0=0.1, center=-4.0, width=0.5)
        g = gamma_set_hl(HLDensities((flat_density,), flat_density, pump_up), 4.0, 2.0)
        assert g.model is ModelKind.HL
        assert g.names() == ["g0", "h1", "h2"]
        assert g["g0"] == pytest.approx(math.pi)
        assert g["h2"] == pytest.approx(0.1 * math.pi)
        assert set(g.coefficients) == {"g0", "h1", "h2"}
        assert set(g.matter) == {"h1", "h2"}

    def test_dhl_set(self) -> None:
        """Test the DHL detunings at +-mu."""
        at_mu = FlatDensity(j0=0.2, center=2.0, half_width=1.0)
        at_minus_mu = FlatDensity(j0=0.3, center=-2.0, half_width=1.0)
        cavity = FlatDensity(j0=0.1, center=4.0, half_width=1.0)
        g = gamma_set_dhl(
            DHLDensities((cavity,), at_mu, at_minus_mu, at_mu, at_minus_mu), 4.0, 2.0
        )
        assert g.names() == ["g0", "B+", "B-", "C+", "C-"]
        assert g["B+"] == pytest.approx(0.2 * math.pi)
        assert g["B-"] == pytest.approx(0.3 * math.pi)
        assert g["C+"] == pytest.approx(0.2 * math.pi)
        assert g["C-"] == pytest.approx(0.3 * math.pi)

    def test_resonance_condition(self, flat_density: FlatDensity) -> None:
        """Test that omega_R must equal 2 mu."""
        with pytest.raises(ResonanceViolation):
            gamma_set_hl(HLDensities((flat_density,), flat_density, flat_density), 4.0, 1.5)

    def test_explicit_set(self) -> None:
        """Test direct construction and item access."""
        g = GammaSet.hl(radiation=[1 + 2j, 3 + 4j], h1=0.5, h2=0.25j)
        assert g.n == 2
        assert g["g1"] == 3 + 4j
        assert g["h2"] == 0.25j

    def test_positive_real_parts(self) -> None:
        """Test Re Gamma >= 0 for a nonnegative density in the canonical convention."""
        density = GaussianDensity(j0=1.0, center=0.0, sigma=1.0, cutoff=4.0)
        for root in np.linspace(-3.0, 3.0, 5):
            assert gamma_minus(density, Detuning(1, float(root))).value.real >= 0.0
