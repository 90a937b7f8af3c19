"""Tensor-product operator algebra over spins, fermion pairs and truncated bosons."""

from laser_sl.operators.algebra import (
    SparseOp,
    add,
    adjoint,
    anticommutator,
    commutator,
    frobenius_norm,
    from_dense,
    identity,
    max_abs,
    mul,
    scale,
    total,
    trace,
    zero,
)
from laser_sl.operators.composite import (
    CompositeModelOps,
    LaserLayout,
    composite_ops,
    laser_layout,
    projector_phys,
    radiation_field,
    spin_from_fermions,
)
from laser_sl.operators.local import (
    FERMION_BASIS,
    boson,
    boson_matrix,
    embed,
    fermion,
    fermion_matrix,
    pauli,
    pauli_matrix,
)
from laser_sl.operators.space import (
    HilbertSpec,
    Site,
    SiteKind,
    SpaceHandle,
    build_space,
    single_site_space,
)

__all__ = [
    # Spaces
    "HilbertSpec",
    "Site",
    "SiteKind",
    "SpaceHandle",
    "build_space",
    "single_site_space",
    # Algebra
    "SparseOp",
    "add",
    "adjoint",
    "anticommutator",
    "commutator",
    "frobenius_norm",
    "from_dense",
    "identity",
    "max_abs",
    "mul",
    "scale",
    "total",
    "trace",
    "zero",
    # Local operators
    "FERMION_BASIS",
    "boson",
    "boson_matrix",
    "embed",
    "fermion",
    "fermion_matrix",
    "pauli",
    "pauli_matrix",
    # Composite operators
    "CompositeModelOps",
    "LaserLayout",
    "composite_ops",
    "laser_layout",
    "projector_phys",
    "radiation_field",
    "spin_from_fermions",
]
