"""Generators of the laser models as explicit superoperators."""

from laser_sl.generators.builders import (
    atom_generator,
    build_as_generator,
    build_dhlsl_generator,
    build_hlsl_generator,
    build_single_reservoir_generator,
    dhl_matter_generator,
    radiation_generator,
    spin_mapped_dhl_matter,
)
from laser_sl.generators.export import export_binary, load_binary, text_summary
from laser_sl.generators.params import ASParams, DHLParams, HLParams
from laser_sl.generators.positivity import CPReport, coefficient_matrix, kossakowski_check
from laser_sl.generators.superoperator import (
    InvariantReport,
    Picture,
    Superoperator,
    apply,
    apply_dual,
    difference_norms,
    dual,
    hamiltonian_term,
    invariant_report,
    kernel_dimension,
    left,
    lindblad_term,
    right,
    sandwich,
    sl_term,
    to_heisenberg,
    to_schrodinger,
    unvec,
    vec,
)

__all__ = [
    # Parameters
    "ASParams",
    "DHLParams",
    "HLParams",
    # Superoperators
    "InvariantReport",
    "Picture",
    "Superoperator",
    "apply",
    "apply_dual",
    "difference_norms",
    "dual",
    "hamiltonian_term",
    "invariant_report",
    "kernel_dimension",
    "left",
    "lindblad_term",
    "right",
    "sandwich",
    "sl_term",
    "to_heisenberg",
    "to_schrodinger",
    "unvec",
    "vec",
    # Builders
    "atom_generator",
    "build_as_generator",
    "build_dhlsl_generator",
    "build_hlsl_generator",
    "build_single_reservoir_generator",
    "dhl_matter_generator",
    "radiation_generator",
    "spin_mapped_dhl_matter",
    # Positivity
    "CPReport",
    "coefficient_matrix",
    "kossakowski_check",
    # Export
    "export_binary",
    "load_binary",
    "text_summary",
]
