import io
import json

import pytest

from sl4cube import cli
from sl4cube.cli import SuiteConfig


def small_cfg(**kw):
    base = dict(n_min=0, n_max=1, suites=("sl4", "special"), oracle_n_max=1, seed=3)
    base.update(kw)
    return SuiteConfig(**base)


def test_run_passes_and_exit_zero():
    report, status = cli.run(small_cfg())
    assert status == 0
    assert report.passed
    assert any(c.id.startswith("presentation.") for c in report.checks)
    assert any(c.id.startswith("special.") for c in report.checks)


def test_config_validation():
    with pytest.raises(ValueError):
        cli.run(SuiteConfig(n_min=2, n_max=1))
    with pytest.raises(ValueError):
        cli.run(SuiteConfig(n_max=2, oracle_n_max=3))
    with pytest.raises(ValueError):
        cli.run(SuiteConfig(suites=("bogus",)))
    with pytest.raises(ValueError):
        cli.run(SuiteConfig(output="yaml"))


def test_main_exit_codes(capsys):
    assert cli.main(["verify", "--n-max", "1", "--suite", "sl4", "--output", "text"]) == 0
    out = capsys.readouterr().out
    assert "0 failed" in out
    assert cli.main(["verify", "--n-min", "3", "--n-max", "1"]) == cli.USAGE_ERROR


def test_json_schema(capsys):
    assert cli.main(["verify", "--n-max", "0", "--suite", "poly", "--output", "json", "--seed", "9"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == {"config", "checks"}
    assert payload["config"]["n_max"] == 0
    assert payload["config"]["seed"] == 9
    for check in payload["checks"]:
        assert {"id", "anchor", "n", "status"} <= set(check)
        assert check["status"] in ("pass", "fail", "skipped")
        if check["status"] == "fail":
            assert check.get("witness")


def test_csv_output(capsys):
    assert cli.main(["verify", "--n-max", "0", "--suite", "sl4", "--output", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "id,anchor,n,status,witness"
    assert all(line.count(",") >= 4 for line in lines[1:])


def test_report_determinism():
    cfg = small_cfg(output="json")
    rep1, _ = cli.run(cfg)
    rep2, _ = cli.run(cfg)
    buf1, buf2 = io.StringIO(), io.StringIO()
    cli.render_report(rep1, cfg, buf1)
    cli.render_report(rep2, cfg, buf2)
    assert buf1.getvalue() == buf2.getvalue()


def test_env_overrides(monkeypatch, capsys):
    monkeypatch.setenv("SL4CUBE_N_MAX", "0")
    monkeypatch.setenv("SL4CUBE_SUITE", "sl4")
    monkeypatch.setenv("SL4CUBE_OUTPUT", "json")
    assert cli.main(["verify"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["config"]["n_max"] == 0
    assert payload["config"]["suites"] == ["sl4"]
    # flags win over the environment
    monkeypatch.setenv("SL4CUBE_N_MAX", "1")
    assert cli.main(["verify", "--n-max", "0", "--suite", "sl4", "--output", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["config"]["n_max"] == 0


def test_table_dims(tmp_path):
    out = tmp_path / "dims.csv"
    cli.emit_table("dims", 5, str(out))
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "N,dim"
    assert [line.split(",")[1] for line in lines[1:]] == ["1", "4", "10", "20", "35", "56"]


def test_table_transition_rows(tmp_path):
    out = tmp_path / "trans.csv"
    cli.emit_table("transition", 1, str(out))
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 1 + 16  # header plus 4 x 4 tail pairs
    assert lines[0].startswith("N,s,t,u,S,T,U")


def test_table_wedderburn(tmp_path):
    out = tmp_path / "w.csv"
    cli.emit_table("wedderburn", 4, str(out))
    lines = out.read_text().strip().splitlines()
    assert lines[1:] == ["0,12,25", "1,4,9", "2,0,1"]


def test_table_krawtchouk_json(tmp_path):
    out = tmp_path / "k.json"
    cli.emit_table("krawtchouk", 2, str(out), fmt="json")
    payload = json.loads(out.read_text())
    assert payload["kind"] == "krawtchouk"
    # f_1 = eta/2: row (N, n, power, num, den) = (2, 1, 1, 1, 2)
    assert ["2", "1", "1", "1", "2"] in payload["rows"]


def test_table_cli_and_bad_kind(tmp_path, capsys):
    out = tmp_path / "t.csv"
    assert cli.main(["table", "--kind", "dims", "--n", "2", "--out", str(out)]) == 0
    assert out.exists()
    with pytest.raises(SystemExit):
        cli.main(["table", "--kind", "nope", "--n", "2"])
    assert cli.main(["table", "--kind", "dims", "--n", "-1"]) == cli.USAGE_ERROR


def test_negative_control_cli(monkeypatch):
    # corrupting one generator matrix must fail the matrix suite with a witness
    from sl4cube import sl4core
    from sl4cube.linalg import Mat

    bad = Mat([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 2, 0]])
    monkeypatch.setitem(sl4core._A, 1, bad)
    report, status = cli.run(SuiteConfig(n_max=0, suites=("sl4",), oracle_n_max=0))
    assert status == cli.VERIFY_FAILURE
    assert report.failures
    assert all(c.witness for c in report.failures)
