import json
import math

import pytest

from colour3 import cli


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_series_json_roundtrip(capsys):
    code, out, _ = run(capsys, ["series", "--max-order", "1"])
    assert code == 0
    data = json.loads(out)
    assert data["meta"]["grid"]["size"] == 22
    rows = data["coefficients"]
    assert [r["order"] for r in rows] == [0, 1]
    assert abs(rows[0]["value"] - 1.0) < 1e-6
    assert abs(rows[1]["value"] - 2.0) < 1e-6
    # stored values are the printed 12-digit values: exact round-trip
    assert json.loads(json.dumps(data)) == data


def test_series_csv(capsys, tmp_path):
    out_path = tmp_path / "series.csv"
    code, out, _ = run(capsys, ["series", "--max-order", "1",
                                "--format", "csv", "--out", str(out_path)])
    assert code == 0
    assert out == ""
    lines = out_path.read_text().strip().splitlines()
    assert lines[0] == "order,value,error"
    assert len(lines) == 3


def test_series_determinism(capsys, tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    run(capsys, ["series", "--max-order", "1", "--out", str(a)])
    run(capsys, ["series", "--max-order", "1", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_series_max_order_cap(capsys):
    code, _, err = run(capsys, ["series", "--max-order", "9"])
    assert code == 2
    assert "max_order" in err


def test_eval_closed(capsys):
    code, out, _ = run(capsys, ["eval", "--p1", "0", "--p2", "0",
                                "--order", "2"])
    assert code == 0
    data = json.loads(out)
    assert abs(data["closed"] - 2.0 * (math.pi ** 2 - 6.0)) < 1e-9


def test_eval_both_discrepancy(capsys):
    code, out, _ = run(capsys, ["eval", "--p1", "1", "--p2", "0",
                                "--order", "1", "--source", "both"])
    assert code == 0
    data = json.loads(out)
    assert abs(data["discrepancy"]) < 1e-8


def test_eval_closed_order4_is_usage_error(capsys):
    code, _, err = run(capsys, ["eval", "--p1", "0", "--p2", "0",
                                "--order", "4", "--source", "closed"])
    assert code == 2
    assert "orders 0..3" in err


def test_eval_missing_order(capsys):
    code, _, err = run(capsys, ["eval", "--p1", "0", "--p2", "0"])
    assert code == 2


def test_graphs_order1(capsys):
    code, out, _ = run(capsys, ["graphs", "--order", "1",
                                "--p1", "1", "--p2", "0"])
    assert code == 0
    data = json.loads(out)
    assert len(data["classes"]) == 1
    assert data["classes"][0]["s"] == 2
    assert abs(data["total"] - 0.5 * math.log(2.0)) < 1e-10
    assert abs(data["discrepancy"]) < 1e-10


def test_graphs_near_diagonal_finite(capsys):
    code, out, _ = run(capsys, ["graphs", "--order", "1",
                                "--p1", "1", "--p2", "1.000001"])
    assert code == 0
    data = json.loads(out)
    assert math.isfinite(data["total"])


def test_graphs_order3_rejected(capsys):
    code, _, err = run(capsys, ["graphs", "--order", "3",
                                "--p1", "1", "--p2", "0"])
    assert code == 2


def test_config_file_and_flag_precedence(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "colour3.cfg"
    cfg.write_text("grid_size = 10\npoints = 8\n")
    monkeypatch.setenv("COLOUR3_CONFIG", str(cfg))
    code, out, _ = run(capsys, ["series", "--max-order", "0",
                                "--grid-size", "12"])
    assert code == 0
    data = json.loads(out)
    assert data["meta"]["grid"]["size"] == 12          # flag wins
    assert data["meta"]["quadrature"]["points"] == 8   # file beats default


def test_config_file_bad_key(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("gridsize = 10\n")
    monkeypatch.setenv("COLOUR3_CONFIG", str(cfg))
    code, _, err = run(capsys, ["series", "--max-order", "0"])
    assert code == 2
    assert "unknown config key" in err


def test_verify_subset(capsys):
    code, out, _ = run(capsys, ["verify", "--skip", "recursion",
                                "--skip", "residual", "--skip", "ribbon"])
    assert code == 0
    assert "PASS" in out
    assert "FAIL" not in out


def test_verify_quad_canary(capsys):
    code, out, _ = run(capsys, ["verify", "--points", "2",
                                "--skip", "polylog", "--skip", "recursion",
                                "--skip", "residual", "--skip", "ribbon"])
    assert code == 1
    assert "FAIL" in out
