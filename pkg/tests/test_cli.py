import json
import subprocess
import sys

import pytest

from fllball.cli import main, parse_c_grid


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["stats", "001100101", "--m", "2"], "rho=6 a=4 s=[1,2,2,4] h=1 t=4"),
        (["stats", "0", "--m", "2"], "rho=1 a=1 s=[1] h=1 t=1"),
        (["stats", "012", "--m", "3"], "rho=3 a=2 s=[2,2] h=2 t=2"),
        (["ball", "010", "--m", "2", "--radius", "1", "--method", "both"], "7 7 OK"),
        (["ball", "000", "--m", "2", "--radius", "3", "--method", "enumerate"], "8"),
        (["ball", "012", "--m", "3", "--radius", "1", "--method", "formula"], "17"),
        (["expect", "--m", "2", "--n", "4", "--which", "ball"], "71/8 = 8.875"),
        (["expect", "--m", "2", "--n", "3", "--which", "h"], "7/4 = 1.75"),
        (["expect", "--m", "3", "--n", "3", "--which", "rho"], "7/3 = 2.333333333"),
        (["bounds", "--m", "2", "--n", "100", "--c", "1"], "lambda=994.99 bound=0.13534"),
        (["distance", "01", "10", "--m", "2"], "1"),
        (["distance", "0101", "0101", "--m", "2"], "0"),
        (["distance", "0011", "1100", "--m", "2", "--method", "definitional"], "2"),
    ],
)
def test_documented_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_stats_json(capsys):
    code, out, _ = run(capsys, "stats", "001100101", "--m", "2", "--format", "json")
    assert json.loads(out)["s"] == [1, 2, 2, 4]


def test_ball_list(capsys):
    code, out, _ = run(capsys, "ball", "000", "--m", "2", "--list")
    assert out.splitlines() == ["4", "000", "001", "010", "100"]


def test_formula_unavailable(capsys):
    code, _, err = run(capsys, "ball", "0101", "--m", "2", "--radius", "2", "--method", "formula")
    assert code != 0 and "FormulaUnavailable" in err


def test_parse_error(capsys):
    code, _, err = run(capsys, "stats", "0120", "--m", "2")
    assert code != 0 and "SymbolOutOfRange" in err


def test_expect_below_domain(capsys):
    code, out, _ = run(capsys, "expect", "--m", "3", "--n", "1", "--which", "ball")
    assert code == 0 and out.startswith("3 = 3") and "enumeration" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--m", "2", "--n-max", "10", "--suite", "all"],
        ["verify", "--m", "3", "--n-max", "2", "--suite", "expect"],
        ["verify", "--m", "5", "--n-max", "5", "--suite", "ball"],
        ["verify", "--m", "3", "--n-max", "5", "--suite", "martingale"],
    ],
)
def test_verify(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.splitlines()[-1] == "PASS"


def test_verify_reports_skips(capsys):
    _, out, _ = run(capsys, "verify", "--m", "3", "--n-max", "2", "--suite", "expect")
    assert "DomainTooSmall" in out


def test_martingale_trace(capsys):
    code, out, _ = run(capsys, "martingale", "0110", "--m", "2")
    assert out.splitlines()[:2] == ["i,Z_i,increment", "0,47/8,"]
    code, out, _ = run(capsys, "martingale", "012", "--m", "3")
    assert code == 0 and len(out.splitlines()) == 5


def test_simulate_csv_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["simulate", "--m", "2", "--n", "100", "--samples", "5000", "--seed", "42"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[0] == "c,lambda,upper_count,lower_count,upper_freq,lower_freq,bound_freq"
    c, bound = (float(v) for v in (lines[10].split(",")[0], lines[10].split(",")[-1]))
    assert c == 1.0 and bound == pytest.approx(5000 * 2.718281828459045**-2)


def test_simulate_json_and_grid(tmp_path):
    out = tmp_path / "r.json"
    assert main(["simulate", "--m", "3", "--n", "20", "--samples", "100", "--c-grid", "0.5:1.5:0.5", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert [r["c"] for r in doc["rows"]] == [0.5, 1.0, 1.5]


def test_simulate_invalid(capsys):
    code, _, err = run(capsys, "simulate", "--m", "2", "--n", "100", "--samples", "0")
    assert code != 0 and "InvalidConfig" in err


def test_workers_env_does_not_change_output(tmp_path, monkeypatch):
    args = ["simulate", "--m", "4", "--n", "30", "--samples", "300", "--seed", "5"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(args + ["--out", str(a)])
    monkeypatch.setenv("FLL_WORKERS", "2")
    main(args + ["--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_c_grid_parsing():
    assert parse_c_grid("0.1,0.2") == (0.1, 0.2)
    assert parse_c_grid("0.1:0.3:0.1") == (0.1, 0.2, 0.3)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fllball", "distance", "01", "10", "--m", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
