"""End-to-end CLI behaviour: outputs, exit codes, golden diagram files."""

import json
from pathlib import Path

import pytest

from bilorentz import build_fig2_scenario, build_fig4_scenario, cli, core, save_scenario, scenario_to_dict

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_transform_worked_example(capsys):
    code, out, _ = run_cli(capsys, "transform", "--branch", "l", "--tau", "-1",
                           "--k", "1", "--vel", "2", "--vec", "2,1")
    assert code == 0
    c1, c2 = out.strip().split(",")
    assert float(c1) == 0.0
    assert abs(float(c2) - 1.7320508075688772) < 1e-12


def test_transform_identity(capsys):
    code, out, _ = run_cli(capsys, "transform", "--branch", "lambda", "--tau", "1",
                           "--k", "1", "--vel", "0", "--vec", "3,4")
    assert code == 0
    assert out.strip() == "3.0,4.0"


def test_transform_domain_error_exits_2(capsys):
    code, _, err = run_cli(capsys, "transform", "--branch", "lambda", "--tau", "1",
                           "--k", "1", "--vel", "1", "--vec", "1,0")
    assert code == 2
    assert err.startswith("error:")


def test_transform_infinite_velocity(capsys):
    code, out, _ = run_cli(capsys, "transform", "--branch", "lambda", "--tau", "1",
                           "--k", "-1", "--vel", "infinity", "--vec", "3,4")
    assert code == 0
    assert out.strip() == "-4.0,-3.0"


def test_infinite_velocity_needs_negative_k(capsys):
    code, _, err = run_cli(capsys, "transform", "--branch", "lambda", "--tau", "1",
                           "--k", "1", "--vel", "infinity", "--vec", "3,4")
    assert code == 2
    assert err.startswith("error:")


def test_classify_worked_case(capsys):
    code, out, _ = run_cli(capsys, "classify", "--vec", "2,1", "--metric", "standard")
    assert code == 0
    assert "coord_speed: 0.5" in out
    assert "coord_superluminal: false" in out
    assert "interval_sq: 3.0" in out
    assert "causal_class: timelike" in out


def test_classify_lightlike(capsys):
    code, out, _ = run_cli(capsys, "classify", "--vec", "1,1")
    assert code == 0
    assert "causal_class: lightlike" in out


def test_classify_spacelike(capsys):
    code, out, _ = run_cli(capsys, "classify", "--vec", "1,3")
    assert code == 0
    assert "coord_superluminal: true" in out
    assert "interval_sq: -8.0" in out
    assert "causal_class: spacelike" in out


def test_classify_vertical_displacement(capsys):
    code, out, _ = run_cli(capsys, "classify", "--vec", "0,2", "--metric", "swapped")
    assert code == 0
    assert "coord_speed: inf" in out
    assert "causal_class: timelike" in out


def test_classify_zero_vector_exits_2(capsys):
    code, _, err = run_cli(capsys, "classify", "--vec", "0,0")
    assert code == 2
    assert err.startswith("error:")


def test_compose_velocity_addition(capsys):
    code, out, _ = run_cli(capsys, "compose", "lambda,1,1,0.5", "lambda,1,1,0.5")
    assert code == 0
    assert "fit: branch=lambda tau=1" in out
    vel = float(out.split("vel=")[1].split()[0])
    assert abs(vel - 0.8) < 1e-12


def test_compose_two_antisymmetric(capsys):
    code, out, _ = run_cli(capsys, "compose", "l,-1,1,2", "l,-1,1,3")
    assert code == 0
    assert "fit: branch=lambda" in out
    vel = float(out.split("vel=")[1].split()[0])
    assert abs(vel - 5.0 / 7.0) < 1e-12


def test_compose_bad_spec_exits_2(capsys):
    code, _, err = run_cli(capsys, "compose", "lambda,1,1", "lambda,1,1,0.5")
    assert code == 2
    assert err.startswith("error:")


def test_verify_small_run_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--trials", "2000", "--seed", "42")
    assert code == 0
    assert "all 13 identity checks within tolerance" in out


def test_verify_report_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "verify", "--trials", "1500", "--seed", "7")
    _, second, _ = run_cli(capsys, "verify", "--trials", "1500", "--seed", "7")
    assert first == second


def test_verify_detects_sign_flip(capsys, monkeypatch):
    """Negative control: a corrupted antisymmetric constructor must fail verify."""
    true_make_l = core.make_l

    def flipped_make_l(tau, k, w):
        t = true_make_l(tau, k, w)
        m = tuple(tuple(-x for x in row) for row in t.m)
        return core.Transform(m=m, branch=t.branch, tau=t.tau, k=t.k, vel=t.vel)

    monkeypatch.setattr(core, "make_l", flipped_make_l)
    code, out, _ = run_cli(capsys, "verify", "--trials", "500", "--seed", "3")
    assert code == 1
    assert "FAIL" in out


def test_verify_rejects_bad_trials(capsys):
    code, _, err = run_cli(capsys, "verify", "--trials", "0")
    assert code == 2
    assert err.startswith("error:")


def test_diagram_builtin_writes_pair(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run_cli(capsys, "diagram", "--builtin", "fig3", "--out", "fig3")
    assert code == 0
    assert Path("fig3-original.svg").exists()
    assert Path("fig3-transformed.svg").exists()
    assert "wrote" in out


@pytest.mark.parametrize("name", ["fig2", "fig3", "fig4"])
def test_diagram_matches_golden(name, tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, _, _ = run_cli(capsys, "diagram", "--builtin", name, "--out", name)
    assert code == 0
    for side in ("original", "transformed"):
        produced = Path(f"{name}-{side}.svg").read_bytes()
        expected = (GOLDEN / f"{name}-{side}.svg").read_bytes()
        assert produced == expected


def test_diagram_missing_scenario_exits_2(tmp_path, capsys):
    code, _, err = run_cli(capsys, "diagram", "--scenario",
                           str(tmp_path / "missing.json"), "--out", str(tmp_path / "x"))
    assert code == 2
    assert err.startswith("error:")


def test_diagram_invalid_json_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    code, _, err = run_cli(capsys, "diagram", "--scenario", str(bad),
                           "--out", str(tmp_path / "x"))
    assert code == 2
    assert err.startswith("error:")


def test_diagram_unknown_scenario_key_exits_2(tmp_path, capsys):
    data = scenario_to_dict(build_fig2_scenario())
    data["surprise"] = True
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    code, _, err = run_cli(capsys, "diagram", "--scenario", str(path),
                           "--out", str(tmp_path / "x"))
    assert code == 2
    assert err.startswith("error:")


def test_diagram_empty_window_exits_3(tmp_path, capsys):
    data = scenario_to_dict(build_fig2_scenario())
    data["window"] = {"min": [50, -40], "max": [60, -20]}
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    code, _, err = run_cli(capsys, "diagram", "--scenario", str(path),
                           "--out", str(tmp_path / "x"))
    assert code == 3
    assert err.startswith("error:")


def test_diagram_from_saved_scenario_matches_builtin(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    save_scenario(build_fig4_scenario(), "fig4.json")
    first, _, _ = run_cli(capsys, "diagram", "--scenario", "fig4.json", "--out", "fromfile")
    second, _, _ = run_cli(capsys, "diagram", "--builtin", "fig4", "--out", "builtin")
    assert first == second == 0
    for side in ("original", "transformed"):
        assert (Path(f"fromfile-{side}.svg").read_bytes()
                == Path(f"builtin-{side}.svg").read_bytes())
