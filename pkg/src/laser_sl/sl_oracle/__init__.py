"""Numerical certificate of the stochastic limit at second order."""

from laser_sl.sl_oracle.convergence import (
    CSV_HEADER,
    ConvergenceRow,
    ConvergenceTable,
    convergence_report,
)
from laser_sl.sl_oracle.kernels import (
    counter_rotating_kernel,
    rotating_kernel,
    second_order_term,
    time_consecutive_check,
)
from laser_sl.sl_oracle.reservoir import DiscreteReservoir, discretize

__all__ = [
    "CSV_HEADER",
    "ConvergenceRow",
    "ConvergenceTable",
    "DiscreteReservoir",
    "convergence_report",
    "counter_rotating_kernel",
    "discretize",
    "rotating_kernel",
    "second_order_term",
    "time_consecutive_check",
]
