"""Subcommand bodies: each takes a validated RunConfig and writes one artifact.

The artifact goes to ``--output`` when given, otherwise to stdout. Secondary text
(the Gamma summary of ``gamma``, the generator summary of ``build --export``) goes
to stdout only.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from pathlib import Path
from typing import TextIO

from laser_sl.cli.config import GammaSource, RunConfig
from laser_sl.core.exceptions import ValidationError
from laser_sl.core.io import fmt_float, write_csv, write_lines
from laser_sl.core.settings import Settings, get_settings
from laser_sl.dynamics import evolve, heisenberg_expectations, initial_state, observables
from laser_sl.generators import (
    Superoperator,
    build_as_generator,
    build_dhlsl_generator,
    build_hlsl_generator,
    build_single_reservoir_generator,
    difference_norms,
    export_binary,
    text_summary,
    to_schrodinger,
)
from laser_sl.matching import as_from_hl_gammas, dhl_match_check, hl_gamma_targets_from_as
from laser_sl.operators import SpaceHandle, build_space
from laser_sl.reservoir import (
    DEFAULT_EPS,
    DHLDensities,
    GammaSet,
    HLDensities,
    ModelKind,
    gamma_set_dhl,
    gamma_set_hl,
)
from laser_sl.sl_oracle import convergence_report

logger = logging.getLogger(__name__)

Output = Path | None
Command = Callable[[RunConfig, Output, TextIO], None]

GAMMA_CSV_HEADER = ("name", "re", "im", "resonance", "method", "residual", "resonant", "warning")
COMPARE_CSV_HEADER = ("block", "abs", "rel")


def _complex(pair: tuple[float, float]) -> complex:
    return complex(pair[0], pair[1])


def _fmt_complex(value: complex) -> str:
    return f"{fmt_float(value.real)}{'-' if value.imag < 0 else '+'}{fmt_float(abs(value.imag))}i"


# === Model assembly ===


def _space(config: RunConfig, kind: ModelKind, settings: Settings) -> SpaceHandle:
    return build_space(config.space_spec(kind), settings.dimension_cap)


def gamma_set(config: RunConfig, kind: ModelKind, settings: Settings | None = None) -> GammaSet:
    """Gamma coefficients of the HL or DHL model from the configured source."""
    settings = settings or get_settings()
    run = config.run
    eps = run.eps or DEFAULT_EPS
    densities = config.densities
    if kind is ModelKind.HL:
        hl = config.hl_model()
        section = config.hl
        assert section is not None
        if section.gammas is GammaSource.EXPLICIT:
            assert section.explicit is not None
            ex = section.explicit
            return GammaSet.hl(
                [_complex(g) for g in ex.radiation], _complex(ex.h1), _complex(ex.h2)
            )
        if section.gammas is GammaSource.MATCH:
            report = hl_gamma_targets_from_as(
                config.as_model(), imag_sum=section.imag_sum, tolerance=run.tolerance
            )
            assert report.targets is not None
            return report.targets
        assert section.h1 is not None and section.h2 is not None
        return gamma_set_hl(
            HLDensities(
                radiation=tuple(densities[name] for name in section.radiation),
                h1=densities[section.h1],
                h2=densities[section.h2],
            ),
            hl.omega_r,
            hl.mu,
            eps_seq=eps,
            method=run.method,
            convention=run.convention,
            settings=settings,
        )
    if kind is ModelKind.DHL:
        dhl = config.dhl_model()
        d = config.dhl
        assert d is not None
        if d.gammas is GammaSource.EXPLICIT:
            assert d.explicit is not None
            ex2 = d.explicit
            return GammaSet.dhl(
                [_complex(g) for g in ex2.radiation],
                _complex(ex2.b_plus),
                _complex(ex2.b_minus),
                _complex(ex2.c_plus),
                _complex(ex2.c_minus),
            )
        names = (d.b_plus, d.b_minus, d.c_plus, d.c_minus)
        assert all(name is not None for name in names)
        return gamma_set_dhl(
            DHLDensities(
                radiation=tuple(densities[name] for name in d.radiation),
                b_plus=densities[str(d.b_plus)],
                b_minus=densities[str(d.b_minus)],
                c_plus=densities[str(d.c_plus)],
                c_minus=densities[str(d.c_minus)],
            ),
            dhl.omega_r,
            dhl.mu,
            eps_seq=eps,
            method=run.method,
            convention=run.convention,
            settings=settings,
        )
    raise ValidationError("The AS model has no Gamma coefficients", field="model.kind")


def generator(
    config: RunConfig, kind: ModelKind, settings: Settings | None = None
) -> Superoperator:
    """Heisenberg-picture generator of ``kind`` on the configured space."""
    settings = settings or get_settings()
    space = _space(config, kind, settings)
    lambdas = config.field.lambdas
    if kind is ModelKind.AS:
        return build_as_generator(config.as_model(), space)
    g = gamma_set(config, kind, settings)
    if kind is ModelKind.HL:
        if config.run.single_reservoir:
            return build_single_reservoir_generator(g, lambdas, space)
        return build_hlsl_generator(g, lambdas, space)
    return build_dhlsl_generator(g, lambdas, space)


def _emit_lines(lines: list[str], output: Output, stream: TextIO) -> None:
    write_lines(lines, output if output is not None else stream)


def _emit_csv(
    header: tuple[str, ...], rows: list[list[float | str]], output: Output, stream: TextIO
) -> None:
    write_csv(header, rows, output if output is not None else stream)


# === Subcommands ===


def run_gamma(config: RunConfig, output: Output, stream: TextIO) -> None:
    """Gamma coefficients: CSV artifact plus ``gamma.<name> = value`` lines."""
    g = gamma_set(config, config.model.kind)
    rows: list[list[float | str]] = []
    lines = [f"model = {g.model.value}"]
    for name in g.names():
        value = g[name]
        coef = g.coefficients.get(name)
        if coef is None:
            rows.append([name, value.real, value.imag, "", "explicit", 0.0, "true", "false"])
        else:
            rows.append(
                [
                    name,
                    value.real,
                    value.imag,
                    coef.resonance,
                    coef.report.method,
                    coef.report.residual,
                    str(coef.resonant).lower(),
                    str(coef.warning).lower(),
                ]
            )
            for issue in coef.issues:
                lines.append(f"issue.{name}.{issue['error']} = {issue['message']}")
        lines.append(f"gamma.{name} = {_fmt_complex(value)}")
    _emit_csv(GAMMA_CSV_HEADER, rows, output, stream)
    if output is not None:
        write_lines(lines, stream)


def run_build(config: RunConfig, output: Output, stream: TextIO) -> None:
    """Generator summary; with ``run.export_matrix`` the matrix goes to --output."""
    settings = get_settings()
    L = generator(config, config.model.kind, settings)
    if config.run.picture == "schrodinger":
        L = to_schrodinger(L)
    lines = text_summary(L, settings)
    if config.run.export_matrix:
        if output is None:
            raise ValidationError("run.export_matrix needs --output", field="output")
        size = export_binary(L, output)
        lines.append(f"export.bytes = {size}")
        write_lines(lines, stream)
        return
    _emit_lines(lines, output, stream)


def run_match(config: RunConfig, output: Output, stream: TextIO) -> None:
    """Match report in the direction the model implies."""
    kind = config.model.kind
    run = config.run
    if kind is ModelKind.AS:
        imag_sum = config.hl.imag_sum if config.hl is not None else 0.0
        report = hl_gamma_targets_from_as(
            config.as_model(), imag_sum=imag_sum, tolerance=run.tolerance, strict=run.strict
        )
    elif kind is ModelKind.HL:
        report = as_from_hl_gammas(
            gamma_set(config, kind),
            N=config.field.N,
            lambdas=config.field.lambdas,
            tolerance=run.tolerance,
        )
    else:
        report = dhl_match_check(
            gamma_set(config, kind),
            N=config.field.N,
            lambdas=config.field.lambdas,
            tolerance=run.tolerance,
            strict=run.strict,
        )
    _emit_lines(report.to_lines(), output, stream)


def run_compare(config: RunConfig, output: Output, stream: TextIO) -> None:
    """Frobenius distance table between ``model.kind`` and ``run.compare_with``."""
    first = config.model.kind
    second = config.run.compare_with
    if second is None:
        raise ValidationError("compare needs run.compare_with", field="run.compare_with")
    if (first is ModelKind.DHL) != (second is ModelKind.DHL):
        raise ValidationError(
            f"{first.value} and {second.value} generators act on different spaces",
            field="run.compare_with",
        )
    settings = get_settings()
    a = generator(config, first, settings)
    b = generator(config, second, settings)
    if config.run.picture == "schrodinger":
        a, b = to_schrodinger(a), to_schrodinger(b)
    norms = difference_norms(a, b)
    rows: list[list[float | str]] = []
    for block in ("total", "L1", "L2", "L3"):
        if f"{block}.abs" in norms:
            rows.append([block, norms[f"{block}.abs"], norms[f"{block}.rel"]])
    logger.info("%s vs %s: relative distance %.3e", first.value, second.value, norms["total.rel"])
    _emit_csv(COMPARE_CSV_HEADER, rows, output, stream)


def run_evolve(config: RunConfig, output: Output, stream: TextIO) -> None:
    """Trajectory CSV of the configured observables."""
    run = config.run
    if run.t_grid is None:
        raise ValidationError("evolve needs run.t_grid", field="run.t_grid")
    times = run.times()
    L = generator(config, config.model.kind)
    rho0 = initial_state(run.initial_state, L.space)
    named = observables(run.observables, L.space)
    if run.evolve_picture == "heisenberg":
        trajectory = heisenberg_expectations(L, named, rho0, times, run.tol)
    else:
        trajectory = evolve(to_schrodinger(L), rho0, times, run.tol, observables=named)
    trajectory.to_csv(output if output is not None else stream)


def run_sl_check(config: RunConfig, output: Output, stream: TextIO) -> None:
    """Convergence table of the second-order term toward -Gamma_-."""
    run = config.run
    if run.density is None:
        raise ValidationError("sl-check needs run.density", field="run.density")
    density = config.densities[run.density]
    hl = config.hl_model() if config.hl is not None else None
    omega_r = hl.omega_r if hl is not None else None
    strength = hl.beta if hl is not None else 1.0
    reference = run.reference
    if reference is None:
        reference = omega_r if omega_r is not None else density.center
    band = run.band if run.band is not None else density.support
    if not all(math.isfinite(x) for x in band):
        raise ValidationError("sl-check needs run.band for an unbounded density", field="run.band")
    table = convergence_report(
        density,
        run.M,
        band,
        run.lambdas,
        run.t,
        reference,
        omega_r=omega_r,
        strength=strength,
    )
    table.to_csv(output if output is not None else stream)


COMMANDS: dict[str, Command] = {
    "gamma": run_gamma,
    "build": run_build,
    "match": run_match,
    "compare": run_compare,
    "evolve": run_evolve,
    "sl-check": run_sl_check,
}
