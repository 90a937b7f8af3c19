"""Time evolution, stationary states and trajectory output."""

from laser_sl.dynamics.evolve import evolve, heisenberg_expectations
from laser_sl.dynamics.presets import (
    STATE_PRESETS,
    initial_state,
    matter_kind,
    observable,
    observables,
)
from laser_sl.dynamics.steady import steady_state
from laser_sl.dynamics.trajectory import Trajectory

__all__ = [
    "STATE_PRESETS",
    "Trajectory",
    "evolve",
    "heisenberg_expectations",
    "initial_state",
    "matter_kind",
    "observable",
    "observables",
    "steady_state",
]
