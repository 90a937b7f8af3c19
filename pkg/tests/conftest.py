"""Pytest fixtures and shared configurations for the test suite."""

from __future__ import annotations

from collections.abc import Callable, Iterator
from pathlib import Path

import numpy as np
import pytest

from laser_sl.core.settings import Settings, get_settings
from laser_sl.generators import ASParams
from laser_sl.matching import hl_gamma_targets_from_as
from laser_sl.operators import HilbertSpec, SiteKind, SpaceHandle, build_space
from laser_sl.reservoir import FlatDensity, GammaSet

# =============================================================================
# Shared configurations
# =============================================================================


HL_VS_AS_TOML = """\
[units]
reference_rate = "gamma1"

[model]
kind = "HL"

[field]
N = 0
n = 1
cutoff = 3
lambdas = [0.4]

[as_params]
epsilon = 0.5
gamma1 = 1.0
gamma2 = 2.0
eta = 0.5
omega = [5.0]
kappa = [0.3]

[hl]
omega_r = 4.0
mu = 2.0
gammas = "match"

[run]
compare_with = "AS"
"""

AS_EVOLVE_TOML = """\
[units]
reference_rate = "gamma1"

[model]
kind = "AS"

[field]
cutoff = 2
lambdas = [0.0]

[as_params]
epsilon = 0.5
gamma1 = 1.0
gamma2 = 1.5
eta = 0.5
omega = [5.0]
kappa = [0.3]

[run]
t_grid = { start = 0.0, stop = 2.0, points = 11 }
observables = ["sz[0]", "sp[0]"]
"""

AS_LARGE_TOML = """\
[units]
reference_rate = "gamma1"

[model]
kind = "AS"

[field]
N = 1
n = 2
cutoff = 3
lambdas = [0.2, 0.3]

[as_params]
epsilon = 0.5
gamma1 = 1.0
gamma2 = 1.5
eta = 0.5
omega = [5.0, 5.5]
kappa = [0.3, 0.4]
"""

HL_DENSITIES_TOML = """\
[units]
reference_rate = "kappa"

[model]
kind = "HL"

[field]
lambdas = [0.3]

[hl]
omega_r = 4.0
mu = 2.0
radiation = ["cavity"]
h1 = "pump_down"
h2 = "pump_up"

[densities.cavity]
form = "flat"
j0 = 0.1
center = 4.0
half_width = 2.0

[densities.pump_down]
form = "flat"
j0 = 0.2
center = 4.0
half_width = 1.0

[densities.pump_up]
form = "lorentzian"
j0 = 0.1
center = -4.0
width = 0.5
"""

DHL_EXPLICIT_TOML = """\
[units]
reference_rate = "gamma"

[model]
kind = "DHL"

[field]
N = 0
cutoff = 1
lambdas = [0.2]

[dhl]
omega_r = 4.0
mu = 2.0
gammas = "explicit"

[dhl.explicit]
radiation = [[0.3, 5.0]]
b_plus = [0.4, 0.1]
b_minus = [0.3, -0.2]
c_plus = [0.2, 0.05]
c_minus = [0.3, 0.3]
"""

SL_CHECK_TOML = """\
[units]
reference_rate = "J0"

[model]
kind = "HL"

[field]
lambdas = [1.0]

[hl]
omega_r = 4.0
mu = 2.0
beta = 1.0
gammas = "explicit"

[hl.explicit]
radiation = [[0.1, 0.0]]
h1 = [0.1, 0.0]
h2 = [0.1, 0.0]

[densities.flat]
form = "flat"
j0 = 1.0
center = 4.0
half_width = 1.0

[run]
density = "flat"
M = 400
lambdas = [1.0, 0.5, 0.25, 0.125]
t = 2.0
"""


# =============================================================================
# Settings Fixtures
# =============================================================================


@pytest.fixture(autouse=True)
def fresh_settings() -> Iterator[None]:
    """Drop the cached settings around every test."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def settings() -> Settings:
    """Settings with defaults, independent of the environment."""
    return Settings(_env_file=None)


# =============================================================================
# Space Fixtures
# =============================================================================


def laser_space(
    N: int = 0, n: int = 1, cutoff: int = 3, matter: SiteKind = SiteKind.SPIN
) -> SpaceHandle:
    """Laser space [matter x (2N+1), boson x n]."""
    return build_space(HilbertSpec.laser(2 * N + 1, n, cutoff, matter))


@pytest.fixture
def spin_space() -> SpaceHandle:
    """One spin and one mode with cutoff 3 (d = 8)."""
    return laser_space()


@pytest.fixture
def fermion_space() -> SpaceHandle:
    """One fermion pair and one mode with cutoff 1 (d = 8)."""
    return laser_space(cutoff=1, matter=SiteKind.FERMION_PAIR)


# =============================================================================
# Model Fixtures
# =============================================================================


@pytest.fixture
def as_params() -> ASParams:
    """AS parameters on the manifold gamma2 = 2 gamma1."""
    return ASParams(
        N=0,
        epsilon=0.5,
        gamma1=1.0,
        gamma2=2.0,
        eta=0.5,
        omega=(5.0,),
        kappa=(0.3,),
        lambdas=(0.4,),
    )


@pytest.fixture
def hl_targets(as_params: ASParams) -> GammaSet:
    """HL Gamma coefficients reproducing ``as_params``."""
    targets = hl_gamma_targets_from_as(as_params).targets
    assert targets is not None
    return targets


@pytest.fixture
def balanced_dhl() -> GammaSet:
    """DHL set with Re(B+ + C+) = Re(B- + C-) = 0.6."""
    return GammaSet.dhl(
        radiation=[0.3 + 5.0j],
        b_plus=0.4 + 0.1j,
        b_minus=0.3 - 0.2j,
        c_plus=0.2 + 0.05j,
        c_minus=0.3 + 0.3j,
    )


def random_dhl(rng: np.random.Generator) -> GammaSet:
    """DHL set with random positive real parts."""
    values = rng.uniform(0.05, 1.0, size=5) + 1j * rng.uniform(-1.0, 1.0, size=5)
    return GammaSet.dhl(
        radiation=[complex(values[0])],
        b_plus=complex(values[1]),
        b_minus=complex(values[2]),
        c_plus=complex(values[3]),
        c_minus=complex(values[4]),
    )


@pytest.fixture
def flat_density() -> FlatDensity:
    """J0 = 1 on [3, 5]."""
    return FlatDensity(j0=1.0, center=4.0, half_width=1.0)


# =============================================================================
# Config Fixtures
# =============================================================================


@pytest.fixture
def write_config(tmp_path: Path) -> Callable[..., Path]:
    """Write TOML text into tmp_path and return the file path."""

    def _write(text: str, name: str = "run.toml") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
