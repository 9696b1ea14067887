"""Closed-form temperature kernel for a surface-heated half-space.

The dimensionless model solved here is

    dU/dt = d2U/dz2 + exp(-z),    z > 0, t > 0,
    dU/dz(0, t) = 0  (insulated surface),
    U(z, 0) = 0,  U -> 0 as z -> inf,

i.e. unit-amplitude heating absorbed exponentially with depth, no surface
losses.  ``kernel_u`` evaluates the exact solution; everything downstream
(beam profiles, power scaling, pulse turn-off) is built by superposition:

    T(r, z, t) = P * exp(-2 r^2 / r_b^2) * [U(z, t) - U(z, t - t_off)]

with U == 0 for non-positive time arguments.
"""

from __future__ import annotations

import math

import numpy as np

from .special import erfc, erfcx

__all__ = ["kernel_u", "kernel_h", "surface_trace", "temp_field_nd", "to_physical"]

_SQRT_PI = math.sqrt(math.pi)


def _u_scalar(z: float, t: float) -> float:
    # Scalar twin of the array path below; kept separate because the root
    # finders call this millions of times and the ndarray machinery dominates
    # the cost at size 1.
    if t <= 0.0:
        return 0.0
    root = math.sqrt(4.0 * t)
    a = (2.0 * t - z) / root
    b = (2.0 * t + z) / root
    gauss = math.exp(-(z * z) / (4.0 * t))
    if a >= 0.0:
        term_a = 0.5 * gauss * float(erfcx(a))
    else:
        term_a = math.exp(t - z) - 0.5 * gauss * float(erfcx(-a))
    return (
        -math.exp(-z)
        + term_a
        + gauss * (0.5 * float(erfcx(b)) + 2.0 * math.sqrt(t / math.pi))
        - z * float(erfc(z / root))
    )


def kernel_u(depth, time):
    """Dimensionless temperature rise U at depth ``z >= 0`` and time ``t``.

    Accepts scalars or arrays (broadcast together); returns 0 wherever
    ``t <= 0`` so that delayed copies can be subtracted without masking.

    The textbook closed form contains ``exp(t - z) * erfc((2t - z)/sqrt(4t))``
    style products that overflow long before their product leaves [0, 1].
    Factoring ``exp(-z^2 / 4t)`` out of each erfc term turns them into
    scaled-erfc (erfcx) evaluations that stay bounded for ``z <= 2t``; for
    ``z > 2t`` the erfcx argument goes negative and is rewritten once more
    through ``erfcx(-x) = 2 exp(x^2) - erfcx(x)``, which collapses to an
    ``exp(t - z)`` term that is tiny exactly where the naive form blew up.
    """
    if isinstance(depth, (int, float)) and isinstance(time, (int, float)):
        return _u_scalar(float(depth), float(time))
    z = np.asarray(depth, dtype=float)
    t = np.asarray(time, dtype=float)
    scalar = z.ndim == 0 and t.ndim == 0
    z, t = np.broadcast_arrays(z, t)
    out = np.zeros(z.shape, dtype=float)

    on = t > 0.0
    if np.any(on):
        zs = z[on]
        ts = t[on]
        root = np.sqrt(4.0 * ts)
        a = (2.0 * ts - zs) / root
        b = (2.0 * ts + zs) / root
        gauss = np.exp(-(zs * zs) / (4.0 * ts))

        term_a = np.empty_like(zs)
        shallow = a >= 0.0
        term_a[shallow] = 0.5 * gauss[shallow] * erfcx(a[shallow])
        deep = ~shallow
        # z > 2t: reflect erfcx to keep its argument non-negative; the
        # exp(t - z) absorbed from the reflection is < exp(-t) here.
        term_a[deep] = np.exp(ts[deep] - zs[deep]) - 0.5 * gauss[deep] * erfcx(-a[deep])

        val = (
            -np.exp(-zs)
            + term_a
            + gauss * (0.5 * erfcx(b) + 2.0 * np.sqrt(ts / np.pi))
            - zs * erfc(zs / root)
        )
        out[on] = val

    return float(out) if scalar else out


def kernel_h(time):
    """Surface value ``h(t) = U(0, t)``; zero for ``t <= 0``.

    h(t) = 2 sqrt(t / pi) - 1 + erfcx(sqrt(t)).  Monotone increasing,
    unbounded, with h(t) <= t and slope h'(t) = erfcx(sqrt(t)) <= 1.
    """
    if isinstance(time, (int, float)):
        t = float(time)
        if t <= 0.0:
            return 0.0
        return 2.0 * math.sqrt(t / math.pi) - 1.0 + float(erfcx(math.sqrt(t)))
    t = np.asarray(time, dtype=float)
    scalar = t.ndim == 0
    out = np.zeros(t.shape, dtype=float)
    on = t > 0.0
    if np.any(on):
        ts = t[on]
        out[on] = 2.0 * np.sqrt(ts / np.pi) - 1.0 + erfcx(np.sqrt(ts))
    return float(out) if scalar else out


def surface_trace(p_nd, t_fn, t_n):
    """Beam-center surface temperature rise for a pulse that ends at ``t_fn``.

    Power-on rise minus a copy delayed by the pulse length:
    ``p_nd * (h(t) - h(t - t_fn))``.  Valid for all ``t_n`` (zero before
    onset, decaying tail after turn-off).
    """
    return p_nd * (kernel_h(t_n) - kernel_h(np.asarray(t_n, dtype=float) - t_fn))


def temp_field_nd(p_nd, r_bn, r_n, z_n, t_n, t_fn=None):
    """Full dimensionless temperature field of a Gaussian beam.

    ``t_fn`` is the pulse end time; ``None`` means the beam stays on.
    Radial falloff is ``exp(-2 r^2 / r_b^2)`` (1/e^2-radius convention).
    """
    axial = kernel_u(z_n, t_n)
    if t_fn is not None:
        axial = axial - kernel_u(z_n, np.asarray(t_n, dtype=float) - t_fn)
    radial = np.exp(-2.0 * np.square(np.asarray(r_n, dtype=float)) / (r_bn * r_bn))
    return p_nd * radial * axial


def to_physical(t_nd, params):
    """Map a dimensionless temperature to degrees Celsius.

    The scale is anchored so 0 is baseline skin temperature and 1 is the
    nociceptor activation temperature.
    """
    return params.T_base + (params.T_act - params.T_base) * np.asarray(t_nd, dtype=float)
