"""Activated skin volume and the flight-time/beam-power inversion.

A point is "activated" when its temperature elevation reaches the nociceptor
threshold, i.e. ``T_nd >= 1``.  For a Gaussian beam the activated region at a
given instant is a body of revolution, and its volume reduces exactly to a
one-dimensional depth integral:

    T_nd(r, z, t) = P * exp(-2 r^2 / r_b^2) * U(z, t) >= 1
    <=>  r^2 <= (r_b^2 / 2) * ln(P * U(z, t))
    =>   v(t) = pi * (r_b^2 / 2) * integral_0^{z*} ln(P * U(z, t)) dz,

with ``z*`` the depth where ``P * U(z*, t) = 1``.  Flight is initiated when
``v`` reaches the dimensionless threshold ``pi`` (one unit cylinder).

The observed flight-action time exceeds the initiation time by the reaction
time; ``invert_power`` recovers the center power density from it.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import brentq

from .errors import FlightTimeTooSmall, NonPositivePower
from .kernel import kernel_h, kernel_u, _u_scalar

__all__ = [
    "VOLUME_THRESHOLD_ND",
    "activated_depth",
    "activated_volume_nd",
    "flight_initiation_time",
    "invert_power",
]

# Threshold volume in units of z_s * r_s^2: a cylinder of unit radius and
# unit depth.
VOLUME_THRESHOLD_ND = math.pi

_GL_ORDERS = (64, 128, 256, 512, 1024)
_gl_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gl_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    rule = _gl_cache.get(order)
    if rule is None:
        rule = np.polynomial.legendre.leggauss(order)
        _gl_cache[order] = rule
    return rule


def activated_depth(p_nd: float, t_n: float) -> float:
    """Depth of the activated region on the beam axis.

    Returns 0 when even the surface stays below threshold
    (``p_nd * U(0, t_n) <= 1``), otherwise the unique root ``z*`` of
    ``p_nd * U(z, t_n) = 1`` (unique because U is strictly decreasing in z).
    """
    inv_p = 1.0 / p_nd

    def f(z: float) -> float:
        return _u_scalar(z, t_n) - inv_p

    # Guard with the same evaluation used for the bracket endpoint: right at
    # activation onset the margin is one ulp, and a differently-rounded
    # surface formula here would hand brentq a sign-inconsistent bracket.
    if f(0.0) <= 0.0:
        return 0.0

    z_hi = 1.0
    while f(z_hi) > 0.0:
        z_hi *= 2.0
        if z_hi > 1e12:  # pragma: no cover - U decays to 0, cannot happen
            raise RuntimeError("activated_depth failed to bracket")
    return brentq(f, 0.0, z_hi, xtol=1e-13, rtol=8.9e-16)


def _log_excess_integral(p_nd: float, t_n: float, z_star: float) -> float:
    """integral_0^{z*} ln(p_nd * U(z, t_n)) dz by Gauss-Legendre doubling.

    The integrand is smooth on [0, z*) and vanishes at z*; node counts are
    doubled until two consecutive estimates agree to 1e-9 relative.
    """
    log_p = math.log(p_nd)
    prev = None
    half = 0.5 * z_star
    for order in _GL_ORDERS:
        x, w = _gl_rule(order)
        z = half * (x + 1.0)
        val = half * float(np.dot(w, log_p + np.log(kernel_u(z, t_n))))
        if prev is not None and abs(val - prev) <= 1e-9 * abs(val) + 1e-30:
            return val
        prev = val
    return val


def activated_volume_nd(p_nd: float, r_bn: float, t_n: float) -> float:
    """Activated volume (units of z_s * r_s^2) for a Gaussian beam."""
    z_star = activated_depth(p_nd, t_n)
    if z_star == 0.0:
        return 0.0
    return math.pi * (r_bn * r_bn / 2.0) * _log_excess_integral(p_nd, t_n, z_star)


def flight_initiation_time(p_nd: float, r_bn: float) -> float:
    """Normalized time at which the activated volume reaches the threshold.

    Always solvable for positive power: the surface kernel is unbounded, so
    the activated volume eventually exceeds any threshold.
    """
    if p_nd <= 0.0:
        raise NonPositivePower(f"center power density must be positive, got {p_nd}")

    inv_p = 1.0 / p_nd
    # First the onset of any activation: h(t0) = 1/P.  h(t) <= t makes t=1/P
    # a guaranteed lower bracket endpoint.
    t_lo = inv_p
    t_hi = 2.0 * t_lo
    while kernel_h(t_hi) < inv_p:
        t_hi *= 2.0
    t_onset = brentq(lambda t: kernel_h(t) - inv_p, t_lo, t_hi, rtol=1e-14)

    def excess(t: float) -> float:
        return activated_volume_nd(p_nd, r_bn, t) - VOLUME_THRESHOLD_ND

    t_hi = 2.0 * t_onset
    while excess(t_hi) < 0.0:
        t_hi *= 2.0
    return brentq(excess, t_onset, t_hi, rtol=1e-12)


def invert_power(t_fn: float, r_bn: float, t_rn: float) -> float:
    """Center power density that produces flight action at time ``t_fn``.

    Solves ``flight_initiation_time(P, r_bn) = t_fn - t_rn`` for P.  The
    volume is strictly increasing in P at fixed time, so the root is unique;
    the bracket starts at the zero-volume power ``1 / h(t_cn)`` and grows
    geometrically.
    """
    t_cn = t_fn - t_rn
    if t_cn <= 0.0:
        raise FlightTimeTooSmall(
            f"flight-action time {t_fn} does not exceed reaction time {t_rn} "
            "(normalized units); no positive exposure interval remains"
        )

    def excess(p: float) -> float:
        return activated_volume_nd(p, r_bn, t_cn) - VOLUME_THRESHOLD_ND

    p_lo = 1.0 / kernel_h(t_cn)
    p_hi = 2.0 * p_lo
    while excess(p_hi) < 0.0:
        p_hi *= 2.0
    return brentq(excess, p_lo, p_hi, rtol=1e-12)
