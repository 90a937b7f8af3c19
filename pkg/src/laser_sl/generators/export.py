"""Binary matrix export and key = value text summaries of superoperators.

Binary layout (little-endian):

    offset 0   8 bytes   magic b"LSLSOP1\\0"
    offset 8   uint64    d
    offset 16  uint8     picture (0 Heisenberg, 1 Schrodinger)
    offset 17  7 bytes   zero padding
    offset 24  d^4 x complex128, row-major over the d^2 x d^2 matrix
"""

from __future__ import annotations

import logging
from pathlib import Path

import numpy as np
from scipy import sparse

from laser_sl.core.exceptions import ConfigParseError, DecompositionFailure, ValidationError
from laser_sl.core.settings import Settings, get_settings
from laser_sl.generators.positivity import CPReport, kossakowski_check
from laser_sl.generators.superoperator import (
    BLOCK_NAMES,
    InvariantReport,
    Picture,
    Superoperator,
    invariant_report,
)
from laser_sl.operators.space import SpaceHandle

logger = logging.getLogger(__name__)

MAGIC = b"LSLSOP1\0"
HEADER_SIZE = 24


def export_binary(L: Superoperator, path: str | Path) -> int:
    """Write the dense matrix of L; returns the number of bytes written."""
    d = L.dim
    header = (
        MAGIC
        + np.array([d], dtype="<u8").tobytes()
        + np.array([L.picture.tag], dtype="u1").tobytes()
        + bytes(7)
    )
    payload = np.ascontiguousarray(L.to_dense(), dtype="<c16").tobytes(order="C")
    data = header + payload
    Path(path).write_bytes(data)
    logger.info("Exported %r to %s (%d bytes)", L, path, len(data))
    return len(data)


def load_binary(path: str | Path, space: SpaceHandle) -> Superoperator:
    """Read a matrix written by :func:`export_binary` back onto ``space``.

    Raises:
        ConfigParseError: If the header or size is malformed.
    """
    data = Path(path).read_bytes()
    if len(data) < HEADER_SIZE or data[:8] != MAGIC:
        raise ConfigParseError(str(path), "not a superoperator matrix file")
    d = int(np.frombuffer(data, dtype="<u8", count=1, offset=8)[0])
    tag = data[16]
    if d != space.dimension or len(data) != HEADER_SIZE + 16 * d**4 or tag not in (0, 1):
        raise ConfigParseError(str(path), f"header d={d}, picture={tag} does not fit the space")
    matrix = np.frombuffer(data, dtype="<c16", offset=HEADER_SIZE).reshape(d * d, d * d)
    picture = Picture.HEISENBERG if tag == 0 else Picture.SCHRODINGER
    return Superoperator(space=space, picture=picture, matrix=sparse.csr_matrix(matrix))


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def text_summary(
    L: Superoperator,
    settings: Settings | None = None,
    invariants: InvariantReport | None = None,
    cp: CPReport | None = None,
) -> list[str]:
    """``key = value`` lines: shape, norms, invariant residuals, kernel and CP data.

    Dense diagnostics are skipped (reported as ``skipped``) above the dense cap.
    """
    settings = settings or get_settings()
    invariants = invariants or invariant_report(L, settings)
    lines = [
        f"model = {L.provenance.get('model', 'unknown')}",
        f"picture = {L.picture.value}",
        f"d = {L.dim}",
        f"nnz = {L.nnz}",
        f"norm = {_fmt(invariants.norm)}",
    ]
    for name in BLOCK_NAMES:
        if name in L.blocks:
            block = L.blocks[name]
            norm = float(np.linalg.norm(block.data))
            lines.append(f"norm.{name} = {_fmt(norm)}")
    lines += [
        f"identity_residual = {_fmt(invariants.identity_residual)}",
        f"hermiticity_residual = {_fmt(invariants.hermiticity_residual)}",
        "kernel_dimension = "
        + ("skipped" if invariants.kernel_dimension is None else str(invariants.kernel_dimension)),
    ]
    if cp is None and L.dim**2 <= settings.dense_cap:
        try:
            cp = kossakowski_check(L, settings=settings)
        except (DecompositionFailure, ValidationError) as exc:
            exc.log(logging.WARNING)
            lines.append(f"cp = {exc.code}")
    if cp is not None:
        lines.append(f"cp.min_eigenvalue = {_fmt(cp.min_eigenvalue)}")
        lines.append(f"cp.completely_positive = {str(cp.completely_positive).lower()}")
    elif L.dim**2 > settings.dense_cap:
        lines.append("cp = skipped")
    return lines
