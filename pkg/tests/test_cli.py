"""End-to-end checks of the artifact CLI: files, determinism, exit codes."""

import csv
import json

import pytest

from cvpoly.cli import main

GRID = "--grid=-20,20,1024"


def _read_csv(path):
    with open(path, newline="", encoding="utf-8") as handle:
        return list(csv.reader(handle))


def test_version_exits_zero(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_bad_grid_string_is_usage_error(tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["bare", "--grid", "nonsense", "--out", str(tmp_path)])
    assert info.value.code == 2


def test_bare_artifacts(tmp_path):
    assert main(["bare", "--nu", "0.1", GRID, "--out", str(tmp_path)]) == 0
    for name in ("bare_fock.csv", "bare_coherent.csv", "gate_function.csv"):
        assert (tmp_path / name).exists()
        assert (tmp_path / name).with_suffix(".manifest.json").exists()
    rows = _read_csv(tmp_path / "bare_fock.csv")
    assert rows[0] == ["family", "x", "nu", "fidelity"]
    assert len(rows) == 1 + 11
    family, x, nu, fid = rows[1]
    assert (family, float(x), float(nu)) == ("fock", 0.0, 0.1)
    assert float(fid) == pytest.approx(0.99839514265868978, abs=1e-9)
    raw = (tmp_path / "bare_fock.csv").read_bytes()
    assert b"\r\n" in raw
    manifest = json.loads((tmp_path / "bare_fock.manifest.json").read_text())
    assert manifest["command"] == "bare"
    assert manifest["deterministic"] is True
    assert manifest["parameters"]["nu"] == [0.1]


def test_bare_byte_determinism(tmp_path):
    first = tmp_path / "a"
    second = tmp_path / "b"
    for out in (first, second):
        assert main(["bare", "--nu", "0.1", GRID, "--out", str(out)]) == 0
    for name in ("bare_fock.csv", "bare_coherent.csv", "bare_fock.manifest.json"):
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_method2_jobs_match_serial(tmp_path):
    serial = tmp_path / "serial"
    pooled = tmp_path / "pooled"
    base = ["method2", "--db", "5", GRID]
    assert main(base + ["--jobs", "1", "--out", str(serial)]) == 0
    assert main(base + ["--jobs", "2", "--out", str(pooled)]) == 0
    for name in ("method2_fock.csv", "method2_coherent.csv"):
        assert (serial / name).read_bytes() == (pooled / name).read_bytes()
    rows = _read_csv(serial / "method2_fock.csv")
    assert rows[0] == ["family", "x", "db", "fidelity", "success_prob"]
    assert all(0.0 < float(r[3]) < 1.0 and float(r[4]) > 0.0 for r in rows[1:])


def test_method1_artifacts(tmp_path):
    assert main(["method1", "--db", "5", GRID, "--out", str(tmp_path)]) == 0
    rows = _read_csv(tmp_path / "method1_coherent.csv")
    assert len(rows) == 1 + 11
    # exact-outcome runs report no success column
    assert all(r[4] == "" for r in rows[1:])
    one = next(r for r in rows[1:] if float(r[1]) == 1.0)
    assert 0.0 < float(one[3]) <= 1.0 + 1e-12


def test_method1_postselect_artifacts(tmp_path):
    rc = main(
        ["method1-postselect", "--db", "5", "--delta", "0.1", "--nodes", "3",
         GRID, "--out", str(tmp_path)]
    )
    assert rc == 0
    rows = _read_csv(tmp_path / "method1_postselect.csv")
    assert rows[0] == ["family", "x", "db", "delta", "fidelity", "success_prob"]
    assert len(rows) == 1 + 6
    assert all(0.0 < float(r[4]) < 1.0 and float(r[5]) > 0.0 for r in rows[1:])


def test_method1_optimize_report(tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"q0_scan": [-2, 2, 9], "nodes": 3}))
    rc = main(
        ["method1-optimize", "--config", str(config), GRID, "--out", str(tmp_path)]
    )
    assert rc == 0
    report = json.loads((tmp_path / "optimize_report.json").read_text())
    assert report["unoptimized"]["nominal_outcomes"] == [0.0, 0.0, 0.0]
    assert len(report["optimized"]["nominal_outcomes"]) == 3
    assert report["optimized"]["success_prob"] > report["unoptimized"]["success_prob"]
    assert report["parameters"]["q0_scan"] == [-2.0, 2.0, 9]


def test_wigner_artifacts(tmp_path):
    assert main(["wigner", GRID, "--out", str(tmp_path)]) == 0
    summary = json.loads((tmp_path / "wigner_summary.json").read_text())
    assert summary["panels"]["target"]["negative_regions"] == 4
    assert summary["panels"]["method1"]["negative_regions"] == 3
    assert summary["panels"]["method2"]["negative_regions"] == 3
    assert summary["fidelity_method1"] == pytest.approx(0.902043131593, abs=1e-9)
    assert summary["fidelity_method2"] == pytest.approx(0.928440179266, abs=1e-9)
    rows = _read_csv(tmp_path / "wigner_method1.csv")
    assert len(rows) == 1 + 161 * 161
    assert min(float(r[2]) for r in rows[1:]) < 0.0


def test_verify_passes(tmp_path, capsys):
    assert main(["verify", "--out", str(tmp_path)]) == 0
    report = json.loads((tmp_path / "verify_report.json").read_text())
    assert report["all_passed"] is True
    assert len(report["checks"]) >= 25
    lines = capsys.readouterr().out.splitlines()
    assert all(not line.startswith("FAIL") for line in lines)
    assert lines[-1] == "verify: all checks passed"


def test_verify_reports_failures(tmp_path, capsys):
    assert main(["verify", "--tolerance", "1e-20", "--out", str(tmp_path)]) == 4
    report = json.loads((tmp_path / "verify_report.json").read_text())
    assert report["all_passed"] is False
    assert any(line.startswith("FAIL") for line in capsys.readouterr().out.splitlines())


def test_config_flag_precedence(tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"nu": [0.5]}))
    out = tmp_path / "out"
    rc = main(
        ["bare", "--config", str(config), "--nu", "0.2", GRID, "--out", str(out)]
    )
    assert rc == 0
    manifest = json.loads((out / "bare_fock.manifest.json").read_text())
    assert manifest["parameters"]["nu"] == [0.2]


def test_unknown_config_key_rejected(tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"frobnicate": 1}))
    assert main(["bare", "--config", str(config), "--out", str(tmp_path)]) == 2


def test_out_dir_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("CVPOLY_OUT", str(tmp_path / "from_env"))
    assert main(["bare", "--nu", "0.1", GRID]) == 0
    assert (tmp_path / "from_env" / "bare_fock.csv").exists()


def test_numerical_failure_exits_three(tmp_path, capsys):
    rc = main(["method1", "--grid=-2,2,64", "--out", str(tmp_path)])
    assert rc == 3
    assert "numerical failure" in capsys.readouterr().err
