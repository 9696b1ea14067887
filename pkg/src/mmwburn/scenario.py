"""End-to-end exposure scenarios, curves, sweeps, and transition windows.

An exposure is fully specified by the observed flight-action time t_F (the
instant the subject escapes the beam) and the beam radius as a multiple of
the lateral scale r_s.  The pipeline inverts t_F to the center power density
that would produce exactly that escape time, then evaluates peak surface
temperature and the accumulated damage parameter Omega.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

from .activation import invert_power
from .damage import (
    OMEGA_FIRST_DEGREE,
    OMEGA_SECOND_DEGREE,
    BurnClass,
    classify_burn,
    damage_integral,
    settlement_time,
)
from .errors import FlightTimeTooSmall, MmwBurnError, NoBracket, UnknownParameter
from .kernel import kernel_h, surface_trace, to_physical
from .params import NormalizationScales, SkinExposureParams, default_params, normalize

__all__ = [
    "SWEEPABLE_PARAMS",
    "ExposureOutcome",
    "CurvePoint",
    "SweepCase",
    "run_exposure",
    "surface_temperature_trace",
    "omega_curve",
    "sensitivity_sweep",
    "transition_window",
]

# Names accepted by sensitivity_sweep.  rhoCp sweeps the volumetric heat
# capacity product (J/(m^3 K)); v_c_ratio sweeps the flight-threshold volume
# as a ratio to the (symbolic) reference value.
SWEEPABLE_PARAMS = ("t_R", "T_base", "T_act", "k", "rhoCp", "mu_inv", "v_c_ratio")


@dataclass(frozen=True)
class ExposureOutcome:
    """Everything the model reports for one (t_F, beam radius) exposure.

    Physical fields (seconds, W/cm^2, deg C) come first; the trailing
    dimensionless fields are the internal solution, kept for tracing and
    for composing with the kernel functions directly.
    """

    t_F: float
    t_c: float
    P_d0: float
    T_max: float
    Omega: float
    burn: BurnClass
    t_stl: float
    r_b_multiple: float
    P_nd: float
    t_Fn: float
    t_cn: float
    t_stl_n: float


@dataclass(frozen=True)
class CurvePoint:
    """One curve sample; exactly one of outcome/error is set."""

    t_F: float
    outcome: ExposureOutcome | None
    error: str | None


@dataclass(frozen=True)
class SweepCase:
    """One member of a sensitivity family: the perturbed parameter set, the
    beam radius after the anchoring rule, and its curve."""

    param_name: str
    value: float
    r_bn: float
    params: SkinExposureParams
    scales: NormalizationScales
    points: list[CurvePoint]


def run_exposure(
    t_F: float,
    r_b_multiple: float,
    params: SkinExposureParams | None = None,
    *,
    n1: int = 1024,
    n2: int = 1024,
    c_stl: float = 0.5,
) -> ExposureOutcome:
    """Evaluate one exposure that ends by flight action at ``t_F`` seconds.

    Steps: normalize the parameters, invert t_F to the center power density,
    take the peak surface temperature (reached at beam turn-off), estimate
    the settlement time, and integrate the damage rate up to it.

    Raises FlightTimeTooSmall when ``t_F <= params.t_R``.
    """
    if params is None:
        params = default_params()
    if t_F <= params.t_R:
        raise FlightTimeTooSmall(
            f"flight-action time {t_F} s does not exceed the reaction time "
            f"{params.t_R} s; no exposure interval remains"
        )
    scales = normalize(params)
    t_fn = t_F / scales.t_s
    p_nd = invert_power(t_fn, r_b_multiple, scales.t_Rn)
    t_cn = t_fn - scales.t_Rn
    t_stl_n = settlement_time(p_nd, t_fn, c_stl)
    omega = damage_integral(p_nd, t_fn, scales.coeffs, n1, n2, t_stl_n=t_stl_n)
    return ExposureOutcome(
        t_F=t_F,
        t_c=t_cn * scales.t_s,
        P_d0=p_nd * scales.P_s / 1e4,  # W/m^2 -> W/cm^2
        T_max=to_physical(p_nd * kernel_h(t_fn), params),
        Omega=omega,
        burn=classify_burn(omega),
        t_stl=t_stl_n * scales.t_s,
        r_b_multiple=r_b_multiple,
        P_nd=p_nd,
        t_Fn=t_fn,
        t_cn=t_cn,
        t_stl_n=t_stl_n,
    )


def surface_temperature_trace(
    outcome: ExposureOutcome, params: SkinExposureParams, times_s
) -> np.ndarray:
    """Beam-center surface temperature (deg C) at the given times (s)."""
    t_s = normalize(params).t_s
    t_n = np.asarray(times_s, dtype=float) / t_s
    return to_physical(surface_trace(outcome.P_nd, outcome.t_Fn, t_n), params)


def omega_curve(
    r_b_multiple: float,
    t_F_values,
    params: SkinExposureParams | None = None,
    *,
    n1: int = 1024,
    n2: int = 1024,
    c_stl: float = 0.5,
) -> list[CurvePoint]:
    """Run one exposure per t_F value; failures are captured per point.

    Along increasing t_F both Omega and the inferred power density decrease
    monotonically (slower escape implies a weaker beam).
    """
    if params is None:
        params = default_params()
    points: list[CurvePoint] = []
    for t_F in t_F_values:
        try:
            out = run_exposure(
                float(t_F), r_b_multiple, params, n1=n1, n2=n2, c_stl=c_stl
            )
            points.append(CurvePoint(t_F=float(t_F), outcome=out, error=None))
        except MmwBurnError as exc:
            points.append(
                CurvePoint(t_F=float(t_F), outcome=None, error=f"{type(exc).__name__}: {exc}")
            )
    return points


def _perturbed_case(
    param_name: str,
    value: float,
    r_b_anchor: float,
    params: SkinExposureParams,
) -> tuple[SkinExposureParams, float]:
    """Apply one sensitivity perturbation and its beam-radius anchoring rule.

    Parameters that do not enter the lateral scale r_s leave the normalized
    beam radius at the anchor (same physical radius, same r_s).  The
    penetration depth and the threshold-volume ratio change r_s itself, so
    the normalized radius is rescaled to keep the *physical* radius equal to
    anchor times the reference r_s:

        mu_inv:    r_bn = anchor * sqrt(mu_inv_new / mu_inv_ref)
        v_c_ratio: r_bn = anchor / sqrt(ratio)
    """
    if param_name == "t_R":
        return params.with_updates(t_R=value), r_b_anchor
    if param_name == "T_base":
        return params.with_updates(T_base=value), r_b_anchor
    if param_name == "T_act":
        return params.with_updates(T_act=value), r_b_anchor
    if param_name == "k":
        return params.with_updates(k=value), r_b_anchor
    if param_name == "rhoCp":
        # The model depends on rho_m and C_p only through their product.
        return params.with_updates(rho_m=value / params.C_p), r_b_anchor
    if param_name == "mu_inv":
        return (
            params.with_updates(mu_inv=value),
            r_b_anchor * math.sqrt(value / params.mu_inv),
        )
    if param_name == "v_c_ratio":
        return params, r_b_anchor / math.sqrt(value)
    raise UnknownParameter(
        f"cannot sweep {param_name!r}; expected one of {', '.join(SWEEPABLE_PARAMS)}"
    )


def sensitivity_sweep(
    param_name: str,
    values,
    r_b_anchor: float,
    t_F_values,
    params: SkinExposureParams | None = None,
    *,
    n1: int = 1024,
    n2: int = 1024,
    c_stl: float = 0.5,
) -> list[SweepCase]:
    """One-at-a-time sensitivity family over ``values`` of ``param_name``."""
    if params is None:
        params = default_params()
    cases: list[SweepCase] = []
    for value in values:
        perturbed, r_bn = _perturbed_case(param_name, float(value), r_b_anchor, params)
        cases.append(
            SweepCase(
                param_name=param_name,
                value=float(value),
                r_bn=r_bn,
                params=perturbed,
                scales=normalize(perturbed),
                points=omega_curve(
                    r_bn, t_F_values, perturbed, n1=n1, n2=n2, c_stl=c_stl
                ),
            )
        )
    return cases


def transition_window(
    r_b_multiple: float,
    params: SkinExposureParams | None = None,
    *,
    targets: tuple[float, float] = (OMEGA_FIRST_DEGREE, OMEGA_SECOND_DEGREE),
    t_F_max: float = 1e4,
    xtol_s: float = 1e-4,
    n1: int = 1024,
    n2: int = 1024,
) -> tuple[float, ...]:
    """Flight-action times (s) at which Omega crosses the given thresholds.

    Omega is strictly decreasing in t_F, so each crossing is unique when it
    exists.  The search interval is (t_R + 1 ms, t_F_max]; if Omega does not
    straddle a target there, NoBracket is raised for that target.
    """
    if params is None:
        params = default_params()

    @lru_cache(maxsize=None)
    def log_omega(t_F: float) -> float:
        return math.log(
            run_exposure(t_F, r_b_multiple, params, n1=n1, n2=n2).Omega
        )

    t_lo = params.t_R + 1e-3
    lo, hi = log_omega(t_lo), log_omega(t_F_max)
    crossings = []
    for target in targets:
        log_target = math.log(target)
        if not (lo > log_target > hi):
            raise NoBracket(
                f"Omega({t_lo:g} s)={math.exp(lo):.3g} and "
                f"Omega({t_F_max:g} s)={math.exp(hi):.3g} do not straddle {target:g} "
                f"for beam radius multiple {r_b_multiple:g}"
            )
        crossings.append(
            brentq(lambda t: log_omega(t) - log_target, t_lo, t_F_max, xtol=xtol_s)
        )
    return tuple(crossings)
