"""Shared independent cross-check helpers for the test suite.

The volume oracle deliberately avoids the analytic Gaussian-beam reduction
used by the library: it sums cylindrical midpoint cells where the indicator
"temperature above activation" holds, sharing only the axial kernel (which
is itself pinned against 40-digit reference values in test_kernel.py).
"""

import numpy as np

from mmwburn.kernel import kernel_h, kernel_u


def brute_force_volume(p_nd: float, r_bn: float, t_n: float, n_r: int = 2000, n_z: int = 2000) -> float:
    """3D indicator-sum of the activated volume on a midpoint cylinder grid."""
    z_max = 1.0
    while p_nd * kernel_u(z_max, t_n) >= 1.0:  # axial decay bounds the hot region
        z_max *= 2.0
    r_max = r_bn * np.sqrt(max(np.log(p_nd * kernel_h(t_n)), 0.0) / 2.0) * 1.02
    if r_max == 0.0:
        return 0.0
    r_mid = (np.arange(n_r) + 0.5) * (r_max / n_r)
    z_mid = (np.arange(n_z) + 0.5) * (z_max / n_z)
    radial = p_nd * np.exp(-2.0 * r_mid**2 / r_bn**2)
    hot = np.outer(radial, kernel_u(z_mid, t_n)) >= 1.0
    dr = r_max / n_r
    dz = z_max / n_z
    return float(np.sum(2.0 * np.pi * r_mid[:, None] * dr * dz * hot))


def draw_volume_cases(seed: int, n: int) -> list[tuple[float, float, float]]:
    """Seeded random (power, radius, time) triples with a non-trivial hot region."""
    rng = np.random.default_rng(seed)
    cases = []
    while len(cases) < n:
        p = float(np.exp(rng.uniform(np.log(1.5), np.log(10.0))))
        r_bn = float(np.exp(rng.uniform(np.log(0.5), np.log(5.0))))
        t_n = float(np.exp(rng.uniform(np.log(0.5), np.log(20.0))))
        if p * kernel_h(t_n) >= 1.2:
            cases.append((p, r_bn, t_n))
    return cases


def draw_exposure_cases(seed: int, n: int) -> list[tuple[float, float]]:
    """Seeded random (t_F seconds, beam-radius multiple) pairs over the
    physically reachable envelope the model is used in."""
    rng = np.random.default_rng(seed)
    return [
        (
            float(np.exp(rng.uniform(np.log(0.4), np.log(100.0)))),
            float(np.exp(rng.uniform(np.log(0.5), np.log(20.0)))),
        )
        for _ in range(n)
    ]
