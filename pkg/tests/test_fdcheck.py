"""Finite-difference cross-check: an independent discretization of the same
initial-boundary-value problem must converge to the closed-form kernel."""

import numpy as np
import pytest

from mmwburn.errors import UnstableConfig
from mmwburn.fdcheck import (
    FdConfig,
    max_error_vs_closed_form,
    solution_error_vs_closed_form,
    solve_fd,
)

# Medium-resolution configs keep the unit suite fast; the acceptance tests
# run the full default resolution.
CFG = FdConfig(nz=1501, dt=5e-3, t_end=2.0)
CFG_HALF = FdConfig(nz=751, dt=1e-2, t_end=2.0)
CFG_OFF = FdConfig(nz=1501, dt=5e-3, t_end=2.0, t_off=1.0)


def test_config_validation():
    with pytest.raises(ValueError):
        FdConfig(depth_L=10.0)  # truncates the source too early
    with pytest.raises(ValueError):
        FdConfig(nz=2)
    with pytest.raises(ValueError):
        FdConfig(dt=-1e-3)
    with pytest.raises(ValueError):
        FdConfig(t_off=7.0)  # beyond t_end
    with pytest.raises(ValueError):
        FdConfig(scheme="dufort-frankel")


def test_explicit_scheme_enforces_stability_bound():
    # nz=301 over L=30 gives dz=0.1, so dt must stay below dz^2/2 = 5e-3.
    with pytest.raises(UnstableConfig):
        FdConfig(nz=301, dt=6e-3, scheme="explicit")
    FdConfig(nz=301, dt=4e-3, scheme="explicit")  # inside the bound: fine


def test_dt_snaps_to_land_on_t_end():
    cfg = FdConfig(dt=0.3, t_end=1.0)
    assert cfg.n_steps == 3
    assert abs(cfg.dt_effective - 1.0 / 3.0) < 1e-15


def test_crank_nicolson_tracks_closed_form():
    assert solution_error_vs_closed_form(solve_fd(CFG)) < 1e-4


def test_second_order_convergence():
    ratio = solution_error_vs_closed_form(solve_fd(CFG_HALF)) / solution_error_vs_closed_form(
        solve_fd(CFG)
    )
    # Doubling dz and dt should multiply the error by ~4.
    assert 3.5 < ratio < 4.5


def test_power_off_superposition():
    # After turn-off the closed-form field is U(t) - U(t - t_off); the
    # stepped solution must follow it through the switch.
    assert solution_error_vs_closed_form(solve_fd(CFG_OFF)) < 1e-4


def test_explicit_scheme_agrees_within_first_order():
    err = max_error_vs_closed_form(FdConfig(nz=301, dt=4e-3, t_end=1.0, scheme="explicit"))
    assert err < 3e-3


def test_far_boundary_is_inert():
    # Doubling the domain at fixed dz must not change the near field at all
    # for t <= 1 (the truncation error lives beyond z ~ 20).
    a = solve_fd(FdConfig(depth_L=30.0, nz=1501, dt=5e-3, t_end=1.0))
    b = solve_fd(FdConfig(depth_L=60.0, nz=3001, dt=5e-3, t_end=1.0))
    near = a.z <= 10.0
    assert np.max(np.abs(a.field[:, near] - b.field[:, : int(near.sum())])) < 1e-12


def test_surface_flux_is_zero():
    sol = solve_fd(CFG_OFF)
    dz = sol.config.dz
    res = np.abs(-3 * sol.field[:, 0] + 4 * sol.field[:, 1] - sol.field[:, 2]) / (2 * dz)
    assert float(res.max()) < 1e-3


def test_energy_budget():
    sol = solve_fd(CFG_OFF)
    energy = sol.energy_series()
    on = sol.times <= 1.0
    # Unit absorbed power: stored heat ramps linearly, then stays put.
    assert float(np.max(np.abs(energy[on] - sol.times[on]))) < 1e-3
    assert float(np.max(np.abs(energy[~on] - 1.0))) < 1e-3


def test_max_principle_after_turn_off():
    sol = solve_fd(CFG_OFF)
    after = sol.times >= 1.0
    peak = sol.field[after].max(axis=1)
    assert np.all(np.diff(peak) <= 1e-12)


def test_snapshot_plumbing():
    sol = solve_fd(FdConfig(nz=301, dt=2e-2, t_end=1.0, snapshot_stride=10))
    assert sol.times[0] == 0.0
    assert sol.times[-1] == pytest.approx(1.0)
    assert sol.field.shape == (len(sol.times), 301)
    assert np.array_equal(sol.surface_series(), sol.field[:, 0])
