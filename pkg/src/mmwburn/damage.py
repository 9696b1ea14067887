"""Arrhenius thermal-damage accumulation and burn classification.

Damage is the usual Arrhenius integral Omega = integral A exp(-dE_a/(R T)) dt
evaluated at the beam-center surface point, rewritten in the dimensionless
temperature/time of this model as

    Omega = integral_0^{t_stl} c1 * exp(-1 / (c2 + c3 * T_nd(t))) dt,

with c1 = t_s * A, c2 = R * T_base[K] / dE_a, c3 = R * (T_act - T_base) / dE_a.
The upper limit is the settlement time, after which the trace has decayed to
near-baseline and the remaining tail contributes only O(1e-9) per unit time.

The integrand rises extremely steeply while the beam is on and decays slowly
afterwards, so the quadrature grid is split at the turn-off time: uniform
before it, stretched (algebraically, matching the t^{-1/2} decay of the
trace) after it.  Composite Simpson with per-interval midpoints is used on
both segments.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import InvalidGrid
from .kernel import surface_trace

__all__ = [
    "KELVIN_OFFSET",
    "OMEGA_FIRST_DEGREE",
    "OMEGA_SECOND_DEGREE",
    "OMEGA_THIRD_DEGREE",
    "BurnClass",
    "DamageCoefficients",
    "TimeGrid",
    "damage_coefficients",
    "damage_rate",
    "settlement_time",
    "build_grids",
    "damage_integral",
    "damage_integral_reference",
    "classify_burn",
]

KELVIN_OFFSET = 273.15

# Omega thresholds separating no injury / first / second / third degree.
OMEGA_FIRST_DEGREE = 0.53
OMEGA_SECOND_DEGREE = 1.0
OMEGA_THIRD_DEGREE = 1.0e4


class BurnClass(enum.Enum):
    """Burn severity determined by thresholds on Omega."""

    NONE = "None"
    FIRST_DEGREE = "FirstDegree"
    SECOND_DEGREE = "SecondDegree"
    THIRD_DEGREE = "ThirdDegree"

    def __str__(self) -> str:  # CSV-friendly
        return self.value


@dataclass(frozen=True)
class DamageCoefficients:
    """Dimensionless Arrhenius coefficients (c1 = t_s*A, c2, c3 as above)."""

    c1: float
    c2: float
    c3: float

    def __post_init__(self) -> None:
        if not (self.c1 > 0.0 and 0.0 < self.c3 < self.c2):
            raise ValueError(f"inconsistent damage coefficients: {self}")


def damage_coefficients(params) -> DamageCoefficients:
    """Derive the dimensionless Arrhenius coefficients from physical params.

    ``params`` needs fields rho_m, C_p, k, mu_inv, T_base, T_act, A, dE_a, R
    (SI units, temperatures in Celsius).
    """
    t_s = params.rho_m * params.C_p * params.mu_inv**2 / params.k
    return DamageCoefficients(
        c1=t_s * params.A,
        c2=params.R * (params.T_base + KELVIN_OFFSET) / params.dE_a,
        c3=params.R * (params.T_act - params.T_base) / params.dE_a,
    )


def damage_rate(t_nd_value, coeffs: DamageCoefficients):
    """Dimensionless damage rate k_d at temperature elevation ``t_nd_value``.

    Strictly increasing in temperature; bounded above by c1, so it never
    overflows no matter how hot the trace gets.
    """
    t_nd_value = np.asarray(t_nd_value, dtype=float)
    out = coeffs.c1 * np.exp(-1.0 / (coeffs.c2 + coeffs.c3 * t_nd_value))
    return float(out) if t_nd_value.ndim == 0 else out


def settlement_time(p_nd: float, t_fn: float, c_stl: float = 0.5) -> float:
    """Estimate when the surface trace has decayed back to ``c_stl``.

    Large-time asymptotics of the post-exposure tail give
    t_stl ~ t_fn/2 + (p_nd * t_fn / (c_stl * sqrt(pi)))^2; with c_stl = 0.5
    this is the time for the surface elevation to fall to half of the
    activation elevation (the tail decays like p*t_fn/sqrt(pi*t)).  Any
    power able to trigger flight makes the quadratic term dominate, so the
    estimate always lands beyond the exposure itself.
    """
    t_stl = 0.5 * t_fn + (p_nd * t_fn / (c_stl * math.sqrt(math.pi))) ** 2
    if t_stl <= t_fn:
        raise ValueError(
            f"settlement estimate {t_stl} does not exceed exposure end {t_fn}; "
            "inputs are outside the asymptotic regime"
        )
    return t_stl


@dataclass(frozen=True)
class TimeGrid:
    """Quadrature nodes with the index of the exposure-end node."""

    nodes: np.ndarray
    split_index: int

    @property
    def uniform_segment(self) -> np.ndarray:
        return self.nodes[: self.split_index + 1]

    @property
    def stretched_segment(self) -> np.ndarray:
        return self.nodes[self.split_index :]


def build_grids(t_fn: float, t_stl_n: float, n1: int, n2: int) -> TimeGrid:
    """Dual quadrature grid: uniform on [0, t_fn], stretched to t_stl_n.

    The stretched nodes follow t_j = t_fn * (1 - (1 - beta) j / n2)^(-2) with
    beta = sqrt(t_fn / t_stl_n), which spaces them like the square-root decay
    of the tail; the last node equals t_stl_n up to rounding.
    """
    if not t_fn > 0.0:
        raise InvalidGrid(f"exposure end must be positive, got {t_fn}")
    if not t_stl_n > t_fn:
        raise InvalidGrid(f"settlement time {t_stl_n} must exceed exposure end {t_fn}")
    if n1 < 1 or n2 < 1:
        raise InvalidGrid(f"segment sizes must be >= 1, got {n1}, {n2}")

    uniform = t_fn * np.arange(n1 + 1) / n1
    beta = math.sqrt(t_fn / t_stl_n)
    stretched = t_fn * (1.0 - (1.0 - beta) * np.arange(n2 + 1) / n2) ** -2.0
    return TimeGrid(nodes=np.concatenate([uniform, stretched[1:]]), split_index=n1)


def _composite_simpson(f, nodes: np.ndarray) -> float:
    """Composite Simpson with a midpoint evaluation in every subinterval."""
    fn = f(nodes)
    fm = f(0.5 * (nodes[:-1] + nodes[1:]))
    width = np.diff(nodes)
    return float(np.sum(width / 6.0 * (fn[:-1] + 4.0 * fm + fn[1:])))


def damage_integral(
    p_nd: float,
    t_fn: float,
    coeffs: DamageCoefficients,
    n1: int = 1024,
    n2: int = 1024,
    *,
    c_stl: float = 0.5,
    t_stl_n: float | None = None,
) -> float:
    """Omega accumulated at the beam-center surface point up to settlement.

    Integrates the damage rate of the surface trace over the dual grid; the
    turn-off time is a shared node of both segments so Simpson never
    straddles the slope discontinuity there.
    """
    if t_stl_n is None:
        t_stl_n = settlement_time(p_nd, t_fn, c_stl)
    grid = build_grids(t_fn, t_stl_n, n1, n2)

    def integrand(t_n):
        return damage_rate(surface_trace(p_nd, t_fn, t_n), coeffs)

    return _composite_simpson(integrand, grid.nodes)


def damage_integral_reference(
    p_nd: float,
    t_fn: float,
    coeffs: DamageCoefficients,
    *,
    c_stl: float = 0.5,
    t_stl_n: float | None = None,
    epsrel: float = 1e-10,
) -> float:
    """Adaptive-quadrature Omega, the accuracy reference for the dual grid.

    Same integrand and limits as ``damage_integral`` but evaluated with a
    globally adaptive scheme.  The trace behaves like
    T_max - a*(t - t_fn) + b*(t - t_fn)^{3/2} just after turn-off, so the
    tail segment is integrated in u = sqrt(t - t_fn), which makes the
    integrand smooth there and lets the adaptive scheme reach its tolerance.
    """
    if t_stl_n is None:
        t_stl_n = settlement_time(p_nd, t_fn, c_stl)

    def integrand(t_n: float) -> float:
        return damage_rate(surface_trace(p_nd, t_fn, t_n), coeffs)

    def tail_integrand(u: float) -> float:
        return 2.0 * u * integrand(t_fn + u * u)

    on, _ = quad(integrand, 0.0, t_fn, epsabs=0.0, epsrel=epsrel, limit=800)
    off, _ = quad(
        tail_integrand, 0.0, math.sqrt(t_stl_n - t_fn), epsabs=0.0, epsrel=epsrel, limit=800
    )
    return on + off


def classify_burn(omega: float) -> BurnClass:
    """Map Omega to a burn class (lower thresholds inclusive)."""
    if omega < 0.0:
        raise ValueError(f"damage parameter must be non-negative, got {omega}")
    if omega < OMEGA_FIRST_DEGREE:
        return BurnClass.NONE
    if omega < OMEGA_SECOND_DEGREE:
        return BurnClass.FIRST_DEGREE
    if omega < OMEGA_THIRD_DEGREE:
        return BurnClass.SECOND_DEGREE
    return BurnClass.THIRD_DEGREE
