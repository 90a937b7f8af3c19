"""Dictionaries between stochastic-limit Gamma coefficients and AS parameters.

HL:  kappa_j + i omega_j = Gamma_j^(g),  gamma1 = Re(Gamma^(h1) + Gamma^(h2)),
     epsilon = Im(Gamma^(h1) - Gamma^(h2)),  gamma2 = 2 gamma1,
     eta = (Re Gamma^(h2) - Re Gamma^(h1)) / (Re Gamma^(h2) + Re Gamma^(h1)).

DHL: with R_pm = Re(Gamma^(B pm) + Gamma^(C pm)),
     gamma1 = gamma2 = R_+ + R_-,  epsilon = Im(Gamma^(B+) - Gamma^(B-) - Gamma^(C+) + Gamma^(C-)),
     eta = (Re Gamma^(B-) - Re Gamma^(B+) + Re Gamma^(C+) - Re Gamma^(C-)) / (R_+ + R_-),
     balanced when R_+ = R_-.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from laser_sl.core.exceptions import (
    DegeneratePumpError,
    LaserSLError,
    NoExactMatch,
    ParamInvariantViolation,
    UnbalancedError,
    ValidationError,
)
from laser_sl.generators.params import ASParams
from laser_sl.reservoir.gamma_sets import GammaSet, ModelKind

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-12

DHL_ETA_DERIVATION = (
    "sigma_z action of L2 restricted to n_+ + n_- = 1 compared with -gamma2 (sigma_z - eta I)"
)


@dataclass
class MatchReport:
    """Outcome of a parameter match.

    Attributes:
        model: Model the Gamma coefficients belong to.
        resolved: AS parameters implied by (or projected from) the input; bounds unchecked.
        residuals: Per-relation mismatch values.
        constraints: Named constraint residuals and flags.
        feasible: True iff every residual is within tolerance and eta lies in [-1, 1].
        targets: Gamma coefficients realizing ``resolved`` (inverse direction only).
        imag_sum: Free parameter Im Gamma^(h1) + Im Gamma^(h2) of the HL dictionary.
        issues: Report-level conditions as error dictionaries.
        notes: Free-form ``key = value`` additions.
    """

    model: ModelKind
    resolved: ASParams
    residuals: dict[str, float]
    constraints: dict[str, float | bool]
    feasible: bool
    tolerance: float
    targets: GammaSet | None = None
    imag_sum: float | None = None
    issues: list[dict[str, Any]] = field(default_factory=list)
    notes: dict[str, str] = field(default_factory=dict)

    def to_lines(self) -> list[str]:
        """``key = value`` lines in a fixed order."""
        p = self.resolved
        lines = [
            f"model = {self.model.value}",
            f"feasible = {str(self.feasible).lower()}",
            f"tolerance = {self.tolerance:.17g}",
            f"epsilon = {p.epsilon:.17g}",
            f"gamma1 = {p.gamma1:.17g}",
            f"gamma2 = {p.gamma2:.17g}",
            f"eta = {p.eta:.17g}",
        ]
        for j, (omega, kappa) in enumerate(zip(p.omega, p.kappa)):
            lines.append(f"omega[{j}] = {omega:.17g}")
            lines.append(f"kappa[{j}] = {kappa:.17g}")
        if self.imag_sum is not None:
            lines.append(f"imag_sum = {self.imag_sum:.17g}")
        if self.targets is not None:
            for name in self.targets.names():
                value = self.targets[name]
                lines.append(f"target.{name} = {value.real:.17g}{value.imag:+.17g}i")
        for name, value in self.residuals.items():
            lines.append(f"residual.{name} = {value:.17g}")
        for name, flag in self.constraints.items():
            text = str(flag).lower() if isinstance(flag, bool) else f"{flag:.17g}"
            lines.append(f"constraint.{name} = {text}")
        for issue in self.issues:
            lines.append(f"issue.{issue['error']} = {issue['message']}")
        for key, note in self.notes.items():
            lines.append(f"note.{key} = {note}")
        return lines


def _eta_in_range(eta: float, tolerance: float) -> bool:
    return -1.0 - tolerance <= eta <= 1.0 + tolerance


def _record(report_issues: list[dict[str, Any]], error: LaserSLError, strict: bool) -> None:
    if strict:
        raise error
    error.log(logging.WARNING, exc_info=False)
    report_issues.append(error.to_dict())


def _resolved(
    g: GammaSet,
    epsilon: float,
    gamma1: float,
    gamma2: float,
    eta: float,
    N: int,
    lambdas: Sequence[float] | None,
) -> ASParams:
    return ASParams(
        N=N,
        epsilon=epsilon,
        gamma1=gamma1,
        gamma2=gamma2,
        eta=eta,
        omega=tuple(gj.imag for gj in g.radiation),
        kappa=tuple(gj.real for gj in g.radiation),
        lambdas=tuple(lambdas) if lambdas is not None else (0.0,) * g.n,
    )


def _bound_issues(p: ASParams, issues: list[dict[str, Any]]) -> None:
    try:
        p.check_bounds()
    except ParamInvariantViolation as exc:
        exc.log(logging.WARNING)
        issues.append(exc.to_dict())


def as_from_hl_gammas(
    g: GammaSet,
    *,
    N: int = 0,
    lambdas: Sequence[float] | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> MatchReport:
    """AS parameters realized by an HL-SL Gamma set.

    Raises:
        ValidationError: If ``g`` is not an HL set.
        DegeneratePumpError: If Re Gamma^(h1) + Re Gamma^(h2) = 0 (eta undefined).
    """
    if g.model is not ModelKind.HL:
        raise ValidationError(f"Expected an HL gamma set, got {g.model.value}", field="gammas")
    h1, h2 = g["h1"], g["h2"]
    total = h1.real + h2.real
    if total == 0.0:
        raise DegeneratePumpError(total)
    gamma1 = total
    gamma2 = 2.0 * gamma1
    epsilon = h1.imag - h2.imag
    eta = (h2.real - h1.real) / total
    resolved = _resolved(g, epsilon, gamma1, gamma2, eta, N, lambdas)

    residuals = {
        "re_h1": abs(h1.real - gamma2 * (1.0 - eta) / 4.0),
        "re_h2": abs(h2.real - gamma2 * (1.0 + eta) / 4.0),
        "im_difference": abs((h1.imag - h2.imag) - epsilon),
    }
    eta_ok = _eta_in_range(eta, tolerance)
    constraints: dict[str, float | bool] = {
        "gamma2_eq_2gamma1": abs(gamma2 - 2.0 * gamma1),
        "eta_in_range": eta_ok,
    }
    feasible = eta_ok and all(r <= tolerance * max(1.0, abs(gamma1)) for r in residuals.values())
    issues: list[dict[str, Any]] = []
    _bound_issues(resolved, issues)
    logger.info("HL -> AS: gamma1=%.6g eta=%.6g epsilon=%.6g", gamma1, eta, epsilon)
    return MatchReport(
        model=ModelKind.HL,
        resolved=resolved,
        residuals=residuals,
        constraints=constraints,
        feasible=feasible,
        tolerance=tolerance,
        imag_sum=h1.imag + h2.imag,
        issues=issues,
    )


def hl_gamma_targets_from_as(
    p: ASParams,
    *,
    imag_sum: float = 0.0,
    tolerance: float = DEFAULT_TOLERANCE,
    strict: bool = False,
) -> MatchReport:
    """HL Gamma coefficients that reproduce the AS generator of ``p``.

    Exact only on the manifold gamma2 = 2 gamma1. Elsewhere gamma1 is projected to
    gamma2 / 2 and the distance |gamma1 - gamma2 / 2| is reported as NoExactMatch.

    Args:
        p: AS parameters; the physical bounds are checked.
        imag_sum: Im Gamma^(h1) + Im Gamma^(h2), which does not enter the generator.
        tolerance: Feasibility tolerance.
        strict: Raise NoExactMatch instead of reporting it.

    Example:
        >>> report = hl_gamma_targets_from_as(params)
        >>> report.targets["h1"]
        (0.25+0.25j)
    """
    p.check_bounds()
    residual = abs(p.gamma1 - p.gamma2 / 2.0)
    issues: list[dict[str, Any]] = []
    exact = residual <= tolerance * max(1.0, p.gamma1)
    if not exact:
        _record(issues, NoExactMatch(residual), strict)
    projected = p if exact else p.with_updates(gamma1=p.gamma2 / 2.0)

    re_h1 = projected.gamma2 * (1.0 - projected.eta) / 4.0
    re_h2 = projected.gamma2 * (1.0 + projected.eta) / 4.0
    im_h1 = (projected.epsilon + imag_sum) / 2.0
    im_h2 = (imag_sum - projected.epsilon) / 2.0
    targets = GammaSet.hl(
        radiation=[complex(k, w) for k, w in zip(projected.kappa, projected.omega)],
        h1=complex(re_h1, im_h1),
        h2=complex(re_h2, im_h2),
    )
    eta_ok = _eta_in_range(projected.eta, tolerance)
    return MatchReport(
        model=ModelKind.HL,
        resolved=projected,
        residuals={"gamma2_eq_2gamma1": residual},
        constraints={"gamma2_eq_2gamma1": residual, "eta_in_range": eta_ok},
        feasible=exact and eta_ok,
        tolerance=tolerance,
        targets=targets,
        imag_sum=imag_sum,
        issues=issues,
    )


def dhl_match_check(
    g: GammaSet,
    *,
    N: int = 0,
    lambdas: Sequence[float] | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
    strict: bool = False,
) -> MatchReport:
    """AS parameters realized by a DHL-SL Gamma set, with the balance check.

    Raises:
        ValidationError: If ``g`` is not a DHL set.
        DegeneratePumpError: If R_+ + R_- = 0.
        UnbalancedError: Only when ``strict`` and R_+ != R_-.
    """
    if g.model is not ModelKind.DHL:
        raise ValidationError(f"Expected a DHL gamma set, got {g.model.value}", field="gammas")
    b_plus, b_minus, c_plus, c_minus = g["B+"], g["B-"], g["C+"], g["C-"]
    r_plus = b_plus.real + c_plus.real
    r_minus = b_minus.real + c_minus.real
    total = r_plus + r_minus
    if total == 0.0:
        raise DegeneratePumpError(total)
    gamma1 = b_plus.real + b_minus.real + c_plus.real + c_minus.real
    gamma2 = total
    epsilon = (b_plus - b_minus - c_plus + c_minus).imag
    eta = (b_minus.real - b_plus.real + c_plus.real - c_minus.real) / total
    resolved = _resolved(g, epsilon, gamma1, gamma2, eta, N, lambdas)

    balance = abs(r_plus - r_minus)
    issues: list[dict[str, Any]] = []
    balanced = balance <= tolerance * max(1.0, abs(total))
    if not balanced:
        _record(issues, UnbalancedError(balance), strict)
    eta_ok = _eta_in_range(eta, tolerance)
    _bound_issues(resolved, issues)
    logger.info("DHL -> AS: gamma1=gamma2=%.6g eta=%.6g balance=%.3g", gamma1, eta, balance)
    return MatchReport(
        model=ModelKind.DHL,
        resolved=resolved,
        residuals={"dhl_balance": balance, "gamma1_eq_gamma2": abs(gamma1 - gamma2)},
        constraints={
            "gamma1_eq_gamma2": abs(gamma1 - gamma2),
            "eta_in_range": eta_ok,
            "dhl_balance": balance,
        },
        feasible=balanced and eta_ok,
        tolerance=tolerance,
        issues=issues,
        notes={"eta_derivation": DHL_ETA_DERIVATION},
    )
