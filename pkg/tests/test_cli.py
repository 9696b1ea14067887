"""Command-line behavior: exit codes, file formats, determinism, overrides."""

import json

import pytest

from mmwburn.cli import CURVE_HEADER, TRACE_HEADER, main

FAST = ["--n1", "128", "--n2", "128"]  # keep CLI tests snappy


def run(*argv):
    return main(list(argv))


def csv_body(path):
    """Non-comment lines of a CSV file."""
    return [ln for ln in path.read_text().splitlines() if not ln.startswith("#")]


def meta(path):
    """Parse '# key = value' comment headers into a dict."""
    out = {}
    for ln in path.read_text().splitlines():
        if ln.startswith("# ") and " = " in ln:
            key, _, value = ln[2:].partition(" = ")
            out[key] = value
    return out


# -- single -----------------------------------------------------------------


def test_single_happy_path(tmp_path, capsys):
    out = tmp_path / "row.csv"
    assert run("single", "--tF", "1", "--rb", "1", "--out", str(out), *FAST) == 0
    stdout = capsys.readouterr().out
    assert CURVE_HEADER in stdout
    assert "burn class" in stdout  # human summary follows the CSV
    body = csv_body(out)
    assert body[0] == CURVE_HEADER
    fields = body[1].split(",")
    assert len(fields) == 5 and fields[-1] == "SecondDegree"
    assert abs(float(fields[0]) - 1.0) == 0.0


def test_single_metadata_header(tmp_path):
    out = tmp_path / "row.csv"
    run("single", "--tF", "1", "--rb", "1", "--out", str(out), *FAST)
    m = meta(out)
    assert m["program"].startswith("mmwburn ")
    assert m["t_R"] == "0.275"
    assert m["r_s"] == "unknown"
    assert (m["n1"], m["n2"]) == ("128", "128")


def test_single_infeasible_flight_time_exits_3(capsys):
    assert run("single", "--tF", "0.2", "--rb", "1") == 3
    assert "infeasible" in capsys.readouterr().err


def test_single_plot_requires_trace(tmp_path, capsys):
    assert run("single", "--tF", "1", "--rb", "1", "--plot", *FAST) == 2
    trace = tmp_path / "trace.csv"
    code = run(
        "single", "--tF", "1", "--rb", "1",
        "--trace", str(trace), "--trace-points", "50", "--plot", *FAST,
    )
    assert code == 0
    assert TRACE_HEADER in trace.read_text()
    png = trace.with_suffix(".png")
    assert png.exists() and png.stat().st_size > 1000


def test_byte_identical_reruns(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run("single", "--tF", "2", "--rb", "1.5", "--out", str(a), *FAST)
    run("single", "--tF", "2", "--rb", "1.5", "--out", str(b), *FAST)
    assert a.read_bytes() == b.read_bytes()


# -- configuration resolution -------------------------------------------------


def test_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"params": {"t_R": 0.3}, "n1": 64, "n2": 64}))
    out = tmp_path / "row.csv"
    run("single", "--tF", "1", "--rb", "1", "--config", str(cfg), "--out", str(out))
    m = meta(out)
    assert m["t_R"] == "0.3" and m["n1"] == "64"
    # explicit flag beats the file
    run("single", "--tF", "1", "--rb", "1", "--config", str(cfg), "--t-r", "0.28",
        "--out", str(out))
    assert meta(out)["t_R"] == "0.28"


def test_srt_presets(tmp_path):
    out = tmp_path / "row.csv"
    run("single", "--tF", "1", "--rb", "1", "--srt", "female", "--out", str(out), *FAST)
    assert meta(out)["t_R"] == "0.281"
    run("single", "--tF", "1", "--rb", "1", "--srt", "male", "--out", str(out), *FAST)
    assert meta(out)["t_R"] == "0.268"


@pytest.mark.parametrize(
    "content",
    [
        '{"volume": 3}',                      # unknown top-level key
        '{"params": {"viscosity": 1.0}}',     # unknown parameter name
        "{not json",                          # parse error
    ],
)
def test_bad_config_file_exits_2(tmp_path, capsys, content):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(content)
    assert run("single", "--tF", "1", "--rb", "1", "--config", str(cfg)) == 2
    assert "bad configuration" in capsys.readouterr().err


def test_missing_config_file_exits_2(tmp_path):
    assert run("single", "--tF", "1", "--rb", "1", "--config", str(tmp_path / "no.json")) == 2


def test_bad_grid_sizes_exit_2():
    assert run("single", "--tF", "1", "--rb", "1", "--n1", "0") == 2
    assert run("single", "--tF", "1", "--rb", "1", "--c-stl", "-1") == 2


def test_argparse_errors_exit_2(capsys):
    assert run("single", "--tF", "1") == 2          # missing --rb
    assert run("nonsense") == 2                      # unknown subcommand
    capsys.readouterr()


def test_version_exits_0(capsys):
    assert run("--version") == 0
    assert "mmwburn" in capsys.readouterr().out


# -- curve --------------------------------------------------------------------


def test_curve_writes_one_file_per_radius(tmp_path, capsys):
    code = run(
        "curve", "--rb", "1,2.5", "--rb", "5",
        "--tF-min", "0.2", "--tF-max", "1.0", "--points", "5", "--spacing", "linear",
        "--out-dir", str(tmp_path), *FAST,
    )
    assert code == 0
    capsys.readouterr()
    for rb in ("1", "2.5", "5"):
        path = tmp_path / f"omega_curve_rb{rb}.csv"
        assert path.exists()
        body = csv_body(path)
        assert body[0] == CURVE_HEADER
        assert len(body) == 1 + 4  # 0.2 s is below the reaction time
        assert "# error at t_F_s=0.2" in path.read_text()


def test_curve_is_deterministic_and_plots(tmp_path, capsys):
    args = (
        "curve", "--rb", "1.25", "--tF-min", "0.5", "--tF-max", "1.0", "--points", "4",
        "--out-dir", str(tmp_path), "--plot", *FAST,
    )
    assert run(*args) == 0
    first = (tmp_path / "omega_curve_rb1.25.csv").read_bytes()
    assert run(*args) == 0
    assert (tmp_path / "omega_curve_rb1.25.csv").read_bytes() == first
    png = tmp_path / "omega_curve_rb1.25.png"
    assert png.exists() and png.stat().st_size > 1000
    capsys.readouterr()


def test_curve_bad_range_exits_2(capsys):
    assert run("curve", "--rb", "1", "--tF-min", "2", "--tF-max", "1") == 2
    capsys.readouterr()


# -- sensitivity ---------------------------------------------------------------


def test_sensitivity_family_files_and_manifest(tmp_path, capsys):
    code = run(
        "sensitivity", "--param", "mu_inv", "--values", "0.08e-3,0.32e-3",
        "--rb", "1", "--tF-min", "0.5", "--tF-max", "1.0", "--points", "2",
        "--out-dir", str(tmp_path), "--plot", *FAST,
    )
    assert code == 0
    capsys.readouterr()
    manifest = json.loads((tmp_path / "sensitivity_mu_inv_manifest.json").read_text())
    assert manifest["param"] == "mu_inv"
    r_bns = [case["r_bn"] for case in manifest["cases"]]
    assert abs(r_bns[0] - 0.5**0.5) < 1e-12  # fixed physical radius anchoring
    assert abs(r_bns[1] - 2.0**0.5) < 1e-12
    for case in manifest["cases"]:
        path = tmp_path / case["csv"]
        assert path.exists()
        assert csv_body(path)[0] == CURVE_HEADER
        assert meta(path)["sweep_param"] == "mu_inv"
    assert (tmp_path / "sensitivity_mu_inv.png").stat().st_size > 1000


def test_sensitivity_rejects_unknown_param(capsys):
    assert run("sensitivity", "--param", "emissivity", "--values", "1",
               "--tF-min", "0.5", "--tF-max", "1") == 2
    capsys.readouterr()


# -- validate / trace -----------------------------------------------------------


def test_validate_quadrature_only_passes(capsys):
    assert run("validate", "--quadrature-only") == 0
    out = capsys.readouterr().out
    assert "validation passed" in out
    assert "fd_power_on" not in out


def test_validate_coarse_grid_fails(capsys):
    assert run("validate", "--coarse") == 1
    assert "validation FAILED" in capsys.readouterr().out


def test_trace_to_stdout_and_file(tmp_path, capsys):
    assert run("trace", "--tF", "1", "--rb", "1", "--points", "20", *FAST) == 0
    stdout = capsys.readouterr().out
    assert TRACE_HEADER in stdout
    assert stdout.count("\n") > 20
    out = tmp_path / "trace.csv"
    assert run("trace", "--tF", "1", "--rb", "1", "--points", "20",
               "--out", str(out), "--plot", *FAST) == 0
    capsys.readouterr()
    assert csv_body(out)[0] == TRACE_HEADER
    assert out.with_suffix(".png").stat().st_size > 1000


def test_trace_plot_requires_out(capsys):
    assert run("trace", "--tF", "1", "--rb", "1", "--plot") == 2
    capsys.readouterr()
