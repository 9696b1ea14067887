"""Command-line front end.

Subcommands:
    single       one exposure: CSV row + human-readable summary (+ trace)
    curve        Omega vs flight-action time, one CSV per beam radius
    sensitivity  one-at-a-time parameter families with an audit manifest
    validate     cross-checks (finite-difference oracle, quadrature, identities)
    trace        surface-temperature history as CSV

Units at this boundary are physical: seconds, deg C, W/cm^2, SI parameter
overrides; beam radii are unit-less multiples of the lateral scale r_s.
Numeric CSV fields carry 9 significant digits and output is byte-identical
across runs for identical configuration.

Exit codes: 0 ok, 1 validation failure, 2 bad configuration, 3 infeasible
physics (flight-action time not above the reaction time).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np
from scipy.integrate import quad

from . import __version__
from .damage import damage_integral_reference
from .errors import FlightTimeTooSmall, MmwBurnError
from .fdcheck import FdConfig, solution_error_vs_closed_form, solve_fd
from .kernel import kernel_u
from .params import (
    SkinExposureParams,
    default_params,
    female_srt_params,
    male_srt_params,
    normalize,
)
from .scenario import (
    SWEEPABLE_PARAMS,
    omega_curve,
    run_exposure,
    sensitivity_sweep,
    surface_temperature_trace,
)
from .special import erfc, erfcx

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_BAD_CONFIG = 2
EXIT_INFEASIBLE = 3

CURVE_HEADER = "t_F_s,omega,P_d0_W_cm2,T_max_C,burn_class"
TRACE_HEADER = "t_s,T_C"

PARAM_FIELDS = ("rho_m", "C_p", "k", "mu_inv", "T_base", "T_act", "t_R", "A", "dE_a", "R")
_PARAM_FLAGS = {
    "rho_m": "--rho-m",
    "C_p": "--cp",
    "k": "--k",
    "mu_inv": "--mu-inv",
    "T_base": "--t-base",
    "T_act": "--t-act",
    "t_R": "--t-r",
    "A": "--arrhenius-a",
    "dE_a": "--activation-energy",
    "R": "--gas-constant",
}
_SRT_PRESETS = {
    "combined": default_params,
    "female": female_srt_params,
    "male": male_srt_params,
}


def fmt(x) -> str:
    """9-significant-digit decimal rendering (round-trip safe for the model)."""
    return format(float(x), ".9g")


def _floats_csv(text: str) -> list[float]:
    values = [float(tok) for tok in text.split(",") if tok.strip()]
    if not values:
        raise ValueError(f"no numbers in {text!r}")
    return values


# ---------------------------------------------------------------------------
# configuration resolution


def _add_common_options(sub: argparse.ArgumentParser) -> None:
    g = sub.add_argument_group("model configuration")
    g.add_argument(
        "--config",
        type=Path,
        metavar="FILE",
        help="JSON file with optional keys: params (field:value map), n1, n2, c_stl; "
        "command-line flags override file values",
    )
    g.add_argument(
        "--srt",
        choices=sorted(_SRT_PRESETS),
        help="reaction-time preset (combined 275 ms, female 281 ms, male 268 ms)",
    )
    for name in PARAM_FIELDS:
        g.add_argument(_PARAM_FLAGS[name], dest=name, type=float, metavar="X", help=f"override {name}")
    g.add_argument("--n1", type=int, metavar="N", help="quadrature intervals while beam is on (default 1024)")
    g.add_argument("--n2", type=int, metavar="N", help="quadrature intervals after beam off (default 1024)")
    g.add_argument("--c-stl", dest="c_stl", type=float, metavar="X", help="settlement decay fraction (default 0.5)")


def _resolve(args) -> tuple[SkinExposureParams, dict]:
    """Merge defaults, preset, config file, and flag overrides (in that order)."""
    opts = {"n1": 1024, "n2": 1024, "c_stl": 0.5}
    preset = _SRT_PRESETS[args.srt] if getattr(args, "srt", None) else default_params
    params = preset()

    config_path = getattr(args, "config", None)
    if config_path is not None:
        raw = json.loads(Path(config_path).read_text())
        if not isinstance(raw, dict):
            raise ValueError(f"config file {config_path} must hold a JSON object")
        unknown = set(raw) - {"params", "n1", "n2", "c_stl"}
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        file_params = raw.get("params", {})
        bad = set(file_params) - set(PARAM_FIELDS)
        if bad:
            raise ValueError(f"unknown parameter names in config: {sorted(bad)}")
        params = params.with_updates(**{k: float(v) for k, v in file_params.items()})
        for key in ("n1", "n2", "c_stl"):
            if key in raw:
                opts[key] = raw[key]

    overrides = {
        name: getattr(args, name)
        for name in PARAM_FIELDS
        if getattr(args, name, None) is not None
    }
    if overrides:
        params = params.with_updates(**overrides)
    for key in ("n1", "n2", "c_stl"):
        flag = getattr(args, key, None)
        if flag is not None:
            opts[key] = flag
    if opts["n1"] < 1 or opts["n2"] < 1:
        raise ValueError(f"n1/n2 must be >= 1, got {opts['n1']}/{opts['n2']}")
    if not opts["c_stl"] > 0.0:
        raise ValueError(f"c_stl must be positive, got {opts['c_stl']}")
    return params, opts


def _meta_lines(command: str, params: SkinExposureParams, opts: dict, extras) -> list[str]:
    scales = normalize(params)
    pairs: list[tuple[str, str]] = [
        ("program", f"mmwburn {__version__}"),
        ("command", command),
    ]
    pairs += [(name, fmt(getattr(params, name))) for name in PARAM_FIELDS]
    pairs += [
        ("z_s_m", fmt(scales.z_s)),
        ("t_s_s", fmt(scales.t_s)),
        ("P_s_W_m2", fmt(scales.P_s)),
        ("t_Rn", fmt(scales.t_Rn)),
        ("c1", fmt(scales.coeffs.c1)),
        ("c2", fmt(scales.coeffs.c2)),
        ("c3", fmt(scales.coeffs.c3)),
        ("r_s", scales.r_s),
        ("n1", str(opts["n1"])),
        ("n2", str(opts["n2"])),
        ("c_stl", fmt(opts["c_stl"])),
    ]
    pairs += [(k, v) for k, v in extras]
    return [f"# {key} = {value}" for key, value in pairs]


def _write_text(path: Path | None, lines: list[str]) -> str:
    text = "\n".join(lines) + "\n"
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    return text


# ---------------------------------------------------------------------------
# single


def _outcome_row(out) -> str:
    return ",".join(
        (fmt(out.t_F), fmt(out.Omega), fmt(out.P_d0), fmt(out.T_max), str(out.burn))
    )


def _trace_lines(out, params: SkinExposureParams, opts: dict, t_max: float, points: int):
    times = np.linspace(0.0, t_max, points)
    temps = surface_temperature_trace(out, params, times)
    extras = [
        ("t_F_s", fmt(out.t_F)),
        ("r_b_multiple", fmt(out.r_b_multiple)),
        ("P_d0_W_cm2", fmt(out.P_d0)),
        ("omega", fmt(out.Omega)),
        ("burn_class", str(out.burn)),
        ("t_stl_s", fmt(out.t_stl)),
    ]
    lines = _meta_lines("trace", params, opts, extras) + [TRACE_HEADER]
    lines += [f"{fmt(t)},{fmt(T)}" for t, T in zip(times, temps)]
    return lines, times, temps


def cmd_single(args, params: SkinExposureParams, opts: dict) -> int:
    out = run_exposure(
        args.tF, args.rb, params, n1=opts["n1"], n2=opts["n2"], c_stl=opts["c_stl"]
    )
    extras = [("r_b_multiple", fmt(args.rb))]
    lines = _meta_lines("single", params, opts, extras) + [CURVE_HEADER, _outcome_row(out)]
    text = _write_text(args.out, lines)
    sys.stdout.write(text)
    sys.stdout.write(
        "\n"
        f"flight-action time    t_F   = {fmt(out.t_F)} s\n"
        f"flight-initiation     t_c   = {fmt(out.t_c)} s\n"
        f"center power density  P_d0  = {fmt(out.P_d0)} W/cm^2\n"
        f"peak surface temp     T_max = {fmt(out.T_max)} deg C\n"
        f"damage parameter      Omega = {fmt(out.Omega)}\n"
        f"burn class                  = {out.burn}\n"
        f"settlement time       t_stl = {fmt(out.t_stl)} s\n"
    )
    if args.trace is not None:
        t_max = args.trace_tmax if args.trace_tmax is not None else 2.0 * out.t_stl
        lines, times, temps = _trace_lines(out, params, opts, t_max, args.trace_points)
        _write_text(args.trace, lines)
        if args.plot:
            from .plotting import render_trace

            render_trace(
                args.trace.with_suffix(".png"),
                times,
                temps,
                out.t_F,
                title=f"r_b = {args.rb:g} r_s, t_F = {args.tF:g} s",
            )
    elif args.plot:
        raise ValueError("--plot requires --trace (the figure renders the trace)")
    return EXIT_OK


# ---------------------------------------------------------------------------
# curve


def _tf_grid(args) -> np.ndarray:
    if not (args.tF_min > 0.0 and args.tF_max > args.tF_min):
        raise ValueError(
            f"need 0 < --tF-min < --tF-max, got {args.tF_min} .. {args.tF_max}"
        )
    if args.points is not None:
        n = args.points
    elif args.spacing == "log":
        # default resolution: 60 points per decade
        n = int(math.ceil(60.0 * math.log10(args.tF_max / args.tF_min))) + 1
    else:
        n = 200
    if n < 2:
        raise ValueError(f"need at least 2 curve points, got {n}")
    if args.spacing == "log":
        return np.geomspace(args.tF_min, args.tF_max, n)
    return np.linspace(args.tF_min, args.tF_max, n)


def _curve_lines(points) -> list[str]:
    lines = [CURVE_HEADER]
    for p in points:
        if p.outcome is not None:
            lines.append(_outcome_row(p.outcome))
        else:
            lines.append(f"# error at t_F_s={fmt(p.t_F)}: {p.error}")
    return lines


def cmd_curve(args, params: SkinExposureParams, opts: dict) -> int:
    radii = [rb for group in args.rb for rb in group]
    grid = _tf_grid(args)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for rb in radii:
        if not rb > 0.0:
            raise ValueError(f"beam radius multiple must be positive, got {rb}")
        points = omega_curve(
            rb, grid, params, n1=opts["n1"], n2=opts["n2"], c_stl=opts["c_stl"]
        )
        extras = [
            ("r_b_multiple", fmt(rb)),
            ("t_F_min_s", fmt(args.tF_min)),
            ("t_F_max_s", fmt(args.tF_max)),
            ("spacing", args.spacing),
            ("points", str(len(grid))),
        ]
        path = args.out_dir / f"omega_curve_rb{rb:g}.csv"
        _write_text(path, _meta_lines("curve", params, opts, extras) + _curve_lines(points))
        n_err = sum(1 for p in points if p.error is not None)
        print(f"wrote {path} ({len(points) - n_err} rows, {n_err} errors)")
        if args.plot:
            from .plotting import render_curve

            print(f"wrote {render_curve(path.with_suffix('.png'), points, rb)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# sensitivity


def cmd_sensitivity(args, params: SkinExposureParams, opts: dict) -> int:
    grid = _tf_grid(args)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    cases = sensitivity_sweep(
        args.param,
        args.values,
        args.rb,
        grid,
        params,
        n1=opts["n1"],
        n2=opts["n2"],
        c_stl=opts["c_stl"],
    )
    manifest = {
        "program": f"mmwburn {__version__}",
        "param": args.param,
        "anchor_r_b_multiple": args.rb,
        "t_F_min_s": args.tF_min,
        "t_F_max_s": args.tF_max,
        "spacing": args.spacing,
        "points": int(len(grid)),
        "cases": [],
    }
    for i, case in enumerate(cases, start=1):
        name = f"sensitivity_{args.param}_{i}_{case.value:g}.csv"
        extras = [
            ("sweep_param", args.param),
            ("sweep_value", fmt(case.value)),
            ("r_bn", fmt(case.r_bn)),
        ]
        path = args.out_dir / name
        _write_text(
            path, _meta_lines("sensitivity", case.params, opts, extras) + _curve_lines(case.points)
        )
        print(f"wrote {path}")
        manifest["cases"].append(
            {
                "value": case.value,
                "r_bn": case.r_bn,
                "csv": name,
                "scales": {
                    "z_s_m": case.scales.z_s,
                    "t_s_s": case.scales.t_s,
                    "P_s_W_m2": case.scales.P_s,
                    "t_Rn": case.scales.t_Rn,
                    "c1": case.scales.coeffs.c1,
                    "c2": case.scales.coeffs.c2,
                    "c3": case.scales.coeffs.c3,
                    "r_s": case.scales.r_s,
                },
            }
        )
    manifest_path = args.out_dir / f"sensitivity_{args.param}_manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n")
    print(f"wrote {manifest_path}")
    if args.plot:
        from .plotting import render_sensitivity

        print(f"wrote {render_sensitivity(args.out_dir / f'sensitivity_{args.param}.png', cases)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# validate


def _validation_checks(params: SkinExposureParams, opts: dict, args) -> list[tuple[str, float, str, bool]]:
    """Run cross-checks; each entry is (name, value, requirement text, ok)."""
    checks: list[tuple[str, float, str, bool]] = []

    if not args.quadrature_only:
        if args.coarse:
            cfg_on = FdConfig(nz=61, dt=5e-2)
            cfg_off = FdConfig(nz=61, dt=5e-2, t_off=2.0)
            cfg_half = FdConfig(nz=31, dt=1e-1)
        else:
            cfg_on = FdConfig()
            cfg_off = FdConfig(t_off=2.0)
            cfg_half = FdConfig(nz=(FdConfig.nz - 1) // 2 + 1, dt=2 * FdConfig.dt)
        sol_on = solve_fd(cfg_on)
        err_on = solution_error_vs_closed_form(sol_on)
        checks.append(("fd_power_on_max_error", err_on, "<= 1e-3", err_on <= 1e-3))
        err_off = solution_error_vs_closed_form(solve_fd(cfg_off))
        checks.append(("fd_power_off_max_error", err_off, "<= 1e-3", err_off <= 1e-3))
        err_half = solution_error_vs_closed_form(solve_fd(cfg_half))
        ratio = err_half / err_on if err_on > 0 else math.inf
        checks.append(
            ("fd_halved_grid_error_ratio", ratio, "in [3, 5] (second order)", 3.0 <= ratio <= 5.0)
        )
        i2 = int(np.argmin(np.abs(sol_on.times - 2.0)))
        energy = float(sol_on.energy_series()[i2]) - float(sol_on.times[i2])
        checks.append(("fd_energy_defect_at_t2", abs(energy), "<= 1e-3", abs(energy) <= 1e-3))

    coeffs = normalize(params).coeffs
    rng = np.random.default_rng(args.seed)
    for i in range(5):
        # Draw model-realizable exposures: flight time and beam radius first,
        # beam power from the inversion, so the randomized trial stays on the
        # physically reachable manifold instead of arbitrary (power, time) pairs.
        t_f = float(np.exp(rng.uniform(np.log(0.4), np.log(100.0))))
        r_bn = float(np.exp(rng.uniform(np.log(0.5), np.log(20.0))))
        case = run_exposure(t_f, r_bn, params, n1=opts["n1"], n2=opts["n2"], c_stl=opts["c_stl"])
        ref = damage_integral_reference(case.P_nd, case.t_Fn, coeffs, c_stl=opts["c_stl"])
        rel = abs(case.Omega - ref) / abs(ref)
        checks.append((f"simpson_vs_adaptive_case{i + 1}", rel, "<= 1e-5", rel <= 1e-5))

    base = run_exposure(1.0, 1.0, params, n1=opts["n1"], n2=opts["n2"], c_stl=opts["c_stl"])
    fine = run_exposure(
        1.0, 1.0, params, n1=2 * opts["n1"], n2=2 * opts["n2"], c_stl=opts["c_stl"]
    )
    drift = abs(base.Omega - fine.Omega) / fine.Omega
    checks.append(("grid_refinement_drift_on_doubling", drift, "<= 1e-6", drift <= 1e-6))

    for t in (0.5, 2.0, 10.0):
        integral, _ = quad(kernel_u, 0.0, np.inf, args=(t,), epsabs=1e-13, epsrel=1e-13, limit=400)
        rel = abs(integral - t) / t
        checks.append((f"energy_identity_t{t:g}", rel, "<= 1e-6", rel <= 1e-6))

    x = np.linspace(0.0, 25.0, 2001)
    rel = float(np.max(np.abs(erfcx(x) * np.exp(-x * x) - erfc(x)) / erfc(x)))
    checks.append(("erfcx_identity_max_rel", rel, "<= 1e-12", rel <= 1e-12))
    return checks


def cmd_validate(args, params: SkinExposureParams, opts: dict) -> int:
    checks = _validation_checks(params, opts, args)
    width = max(len(name) for name, *_ in checks)
    failures = 0
    for name, value, requirement, ok in checks:
        status = "ok" if ok else "FAIL"
        print(f"{name:<{width}}  {value:14.6e}  {requirement:<28} {status}")
        failures += 0 if ok else 1
    if failures:
        print(f"validation FAILED: {failures} of {len(checks)} checks out of tolerance")
        return EXIT_VALIDATION
    print(f"validation passed: all {len(checks)} checks within tolerance")
    return EXIT_OK


# ---------------------------------------------------------------------------
# trace


def cmd_trace(args, params: SkinExposureParams, opts: dict) -> int:
    out = run_exposure(
        args.tF, args.rb, params, n1=opts["n1"], n2=opts["n2"], c_stl=opts["c_stl"]
    )
    t_max = args.t_max if args.t_max is not None else 2.0 * out.t_stl
    lines, times, temps = _trace_lines(out, params, opts, t_max, args.points)
    text = _write_text(args.out, lines)
    if args.out is None:
        sys.stdout.write(text)
    else:
        print(f"wrote {args.out}")
    if args.plot:
        if args.out is None:
            raise ValueError("--plot requires --out (the figure is written alongside it)")
        from .plotting import render_trace

        path = render_trace(
            args.out.with_suffix(".png"),
            times,
            temps,
            out.t_F,
            title=f"r_b = {args.rb:g} r_s, t_F = {args.tF:g} s",
        )
        print(f"wrote {path}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser / entry


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mmwburn",
        description="Skin thermal-injury risk for millimeter-wave beam exposures "
        "ended by flight action.",
    )
    parser.add_argument("--version", action="version", version=f"mmwburn {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("single", help="run one exposure and report the outcome")
    p.add_argument("--tF", type=float, required=True, metavar="S", help="flight-action time, s")
    p.add_argument("--rb", type=float, required=True, metavar="X", help="beam radius, multiples of r_s")
    p.add_argument("--out", type=Path, metavar="FILE", help="also write the CSV row here")
    p.add_argument("--trace", type=Path, metavar="FILE", help="write surface-temperature trace CSV")
    p.add_argument("--trace-points", type=int, default=400, metavar="N")
    p.add_argument("--trace-tmax", type=float, default=None, metavar="S", help="trace end (default 2*t_stl)")
    p.add_argument("--plot", action="store_true", help="render the trace as PNG next to it")
    _add_common_options(p)
    p.set_defaults(func=cmd_single)

    p = sub.add_parser("curve", help="Omega vs t_F curves, one CSV per beam radius")
    p.add_argument("--rb", action="append", required=True, type=_floats_csv, metavar="X[,X...]",
                   help="beam radius multiple(s); repeatable")
    p.add_argument("--tF-min", dest="tF_min", type=float, required=True, metavar="S")
    p.add_argument("--tF-max", dest="tF_max", type=float, required=True, metavar="S")
    p.add_argument("--points", type=int, default=None, metavar="N",
                   help="samples (default: 60 per decade, log spacing)")
    p.add_argument("--spacing", choices=("log", "linear"), default="log")
    p.add_argument("--out-dir", dest="out_dir", type=Path, default=Path("."), metavar="DIR")
    p.add_argument("--plot", action="store_true", help="render one PNG per curve CSV")
    _add_common_options(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("sensitivity", help="one-at-a-time parameter sweep family")
    p.add_argument("--param", required=True, choices=SWEEPABLE_PARAMS)
    p.add_argument("--values", required=True, type=_floats_csv, metavar="X,X,...",
                   help="values of the swept parameter (SI units; v_c_ratio is a ratio)")
    p.add_argument("--rb", type=float, default=1.0, metavar="X",
                   help="anchor beam radius in multiples of the reference r_s (default 1)")
    p.add_argument("--tF-min", dest="tF_min", type=float, required=True, metavar="S")
    p.add_argument("--tF-max", dest="tF_max", type=float, required=True, metavar="S")
    p.add_argument("--points", type=int, default=None, metavar="N")
    p.add_argument("--spacing", choices=("log", "linear"), default="log")
    p.add_argument("--out-dir", dest="out_dir", type=Path, default=Path("."), metavar="DIR")
    p.add_argument("--plot", action="store_true", help="render the family overlay PNG")
    _add_common_options(p)
    p.set_defaults(func=cmd_sensitivity)

    p = sub.add_parser("validate", help="run the cross-check suite")
    p.add_argument("--quadrature-only", action="store_true",
                   help="skip the finite-difference solves")
    p.add_argument("--coarse", action="store_true",
                   help="use a deliberately coarse finite-difference grid (forces failure)")
    p.add_argument("--seed", type=int, default=20260825, help="seed for randomized cases")
    _add_common_options(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("trace", help="surface-temperature history CSV")
    p.add_argument("--tF", type=float, required=True, metavar="S")
    p.add_argument("--rb", type=float, required=True, metavar="X")
    p.add_argument("--points", type=int, default=500, metavar="N")
    p.add_argument("--t-max", dest="t_max", type=float, default=None, metavar="S",
                   help="end of the trace (default 2*t_stl)")
    p.add_argument("--out", type=Path, default=None, metavar="FILE", help="default: stdout")
    p.add_argument("--plot", action="store_true", help="render PNG next to --out")
    _add_common_options(p)
    p.set_defaults(func=cmd_trace)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_BAD_CONFIG
        return code
    try:
        params, opts = _resolve(args)
        return args.func(args, params, opts)
    except FlightTimeTooSmall as exc:
        print(f"error: infeasible physics: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: bad configuration: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    except MmwBurnError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
