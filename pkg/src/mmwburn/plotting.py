"""Figure rendering for the CLI report paths.

Every function writes one PNG next to the delimited output it illustrates
and returns the path.  Rendering is headless (Agg); styling is deliberately
plain so the CSV stays the authoritative artifact.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .damage import OMEGA_FIRST_DEGREE, OMEGA_SECOND_DEGREE, OMEGA_THIRD_DEGREE

__all__ = ["render_trace", "render_curve", "render_sensitivity"]

_THRESHOLDS = (
    (OMEGA_FIRST_DEGREE, "first degree"),
    (OMEGA_SECOND_DEGREE, "second degree"),
    (OMEGA_THIRD_DEGREE, "third degree"),
)


def render_trace(path, times_s, temps_c, t_f_s: float, title: str | None = None) -> Path:
    """Surface-temperature history with the beam turn-off instant marked."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(times_s, temps_c, lw=1.5)
    ax.axvline(t_f_s, color="gray", ls="--", lw=1.0, label=f"beam off at {t_f_s:g} s")
    ax.set_xlabel("time [s]")
    ax.set_ylabel("surface temperature [deg C]")
    if title:
        ax.set_title(title)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _omega_axes(ax) -> None:
    ax.set_yscale("log")
    ax.set_xscale("log")
    ax.set_xlabel("flight-action time t_F [s]")
    ax.set_ylabel("damage parameter Omega")
    for level, label in _THRESHOLDS:
        ax.axhline(level, color="gray", ls=":", lw=0.8)
        ax.annotate(
            label,
            xy=(1.0, level),
            xycoords=("axes fraction", "data"),
            xytext=(-4, 2),
            textcoords="offset points",
            ha="right",
            fontsize=7,
            color="gray",
        )


def _curve_xy(points):
    xs = [p.t_F for p in points if p.outcome is not None]
    ys = [p.outcome.Omega for p in points if p.outcome is not None]
    return xs, ys


def render_curve(path, points, r_b_multiple: float) -> Path:
    """Omega vs flight-action time for one beam radius."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    xs, ys = _curve_xy(points)
    ax.plot(xs, ys, lw=1.5, label=f"r_b = {r_b_multiple:g} r_s")
    _omega_axes(ax)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_sensitivity(path, cases) -> Path:
    """Overlaid Omega curves for one sensitivity family."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for case in cases:
        xs, ys = _curve_xy(case.points)
        ax.plot(xs, ys, lw=1.2, label=f"{case.param_name} = {case.value:g}")
    _omega_axes(ax)
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
