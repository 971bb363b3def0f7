import json

import pytest

from wavekin.harness.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse errors exit instead of returning
        code = int(exc.code)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sample_to_stdout(capsys):
    code, out, _ = run(
        capsys, "sample", "--beta", "0.6", "--x=-2:2:5", "--y", "0", "--t", "0"
    )
    assert code == 0
    lines = out.splitlines()
    assert any(l.startswith("# beta = ") for l in lines)
    data = [l for l in lines if l and not l.startswith("#")]
    assert data[0].endswith("value")
    assert len(data) == 6


def test_sample_to_file_and_determinism(tmp_path, capsys):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    args = ["sample", "--beta", "0.6", "--x=-2:2:9", "--t", "0:1:3"]
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()


def test_sample_json_format(capsys):
    code, out, _ = run(
        capsys, "sample", "--beta", "0.5", "--x", "0:1:3", "--t", "0", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "wavekin-field-grid"
    assert doc["metadata"]["beta"] == 0.5


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suites", "quantization")
    assert code == 0
    assert "PASS" in out
    assert "FAIL" not in out


def test_verify_report_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "--suites", "detectability", "--out", str(path))
    assert code == 0
    assert json.loads(path.read_text())["passed"] is True


def test_bad_scenario_exits_2(capsys):
    code, _, err = run(capsys, "sample", "--scenario", "bogus")
    assert code == 2


def test_bad_axis_exits_2(capsys):
    code, _, err = run(capsys, "sample", "--x", "1:2:nope")
    assert code == 2


def test_boosted_rejects_offfamily_exponent(capsys):
    code, _, err = run(capsys, "sample", "--scenario", "boosted", "--a", "0.5")
    assert code == 2
    assert "exponent" in err.lower() or "a = 1" in err


def test_config_file_with_cli_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("beta = 0.3\nscenario = boosted\nx = -1:1:3\nt = 0\ntimestamp = false\n")
    code, out, _ = run(capsys, "sample", "--config", str(cfg), "--beta", "0.6")
    assert code == 0
    assert "# beta = 5.9999999999999998e-01" in out


def test_config_file_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("nonsense = 1\n")
    code, _, err = run(capsys, "sample", "--config", str(cfg))
    assert code == 2


def test_track_json_output(capsys):
    code, out, _ = run(capsys, "track", "--beta", "0.6", "--target", "carrier-node")
    assert code == 0
    doc = json.loads(out)
    assert doc["fitted_speed"] == pytest.approx(0.6, rel=1e-6)
    assert len(doc["times"]) == len(doc["positions"])


def test_track_modulation(capsys):
    code, out, _ = run(capsys, "track", "--beta", "0.6", "--target", "modulation-crest")
    assert code == 0
    assert json.loads(out)["fitted_speed"] == pytest.approx(5.0 / 3.0, rel=1e-6)


def test_sweep_table(capsys):
    code, out, _ = run(capsys, "sweep", "--a-values", "0,1", "--beta1", "0.5", "--beta2", "0.5")
    assert code == 0
    lines = [l for l in out.splitlines() if l and not l.startswith("#")]
    header, rows = lines[0], lines[1:]
    assert "closure_defect" in header
    assert len(rows) == 2
    defect_a0 = float(rows[0].split(",")[1])
    assert defect_a0 == pytest.approx(0.25, rel=1e-9)


def test_render_writes_png(tmp_path, capsys):
    out = tmp_path / "fig.png"
    code, _, _ = run(
        capsys,
        "render",
        "--beta", "0.6",
        "--x=-8:8:65",
        "--y=-6:6:49",
        "--t", "0",
        "--style", "heatmap",
        "--out", str(out),
    )
    assert code == 0
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_render_dimension_error(tmp_path, capsys):
    code, _, err = run(
        capsys,
        "render",
        "--beta", "0.6",
        "--x=-2:2:5",
        "--y=-2:2:5",
        "--z=-2:2:5",
        "--t", "0",
        "--out", str(tmp_path / "nope.png"),
    )
    assert code == 2
