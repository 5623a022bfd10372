"""Command-line interface: outputs, file side effects, exit codes."""

import csv
import hashlib
import json
import subprocess
import sys

import pytest

from gf2lab.cli import main
from gf2lab.theorems import CheckReport


def test_analyze_exponent_text(capsys):
    assert main(["analyze", "--exp", "7", "--n", "4"]) == 0
    out = capsys.readouterr().out
    assert "field GF(2^4), modulus 0x13" in out
    assert "map x^7" in out
    assert "permutation: yes" in out
    assert "delta (differential uniformity): 4" in out
    assert "nonlinearity: 4" in out


def test_analyze_json_report(tmp_path, capsys):
    out_json = tmp_path / "report.json"
    assert main(["analyze", "--exp", "7", "--n", "4",
                 "--json", str(out_json)]) == 0
    capsys.readouterr()
    doc = json.loads(out_json.read_text())
    assert doc["tool"]["name"] == "gf2lab"
    assert doc["field"] == {"n": 4, "poly": "13"}
    assert doc["map"]["kind"] == "exponent"
    assert doc["map"]["exponent"] == 7
    assert doc["map"]["lut_sha256"] is None
    res = doc["results"]
    assert res["delta"] == 4 and res["nl"] == 4 and res["walsh_max"] == 8
    assert res["is_permutation"] is True
    assert res["is_apn"] is False and res["is_ab"] is None
    hist = res["lambda_histogram"]
    assert set(hist) == {"-4", "0", "4", "8"}
    assert sum(hist.values()) == 16 * 15
    assert set(doc["timings_ms"]) == {"build", "ddt", "walsh"}


def test_analyze_lut_round_trip(tmp_path, capsys):
    lut_path = tmp_path / "map.lut"
    assert main(["analyze", "--exp", "13", "--n", "6",
                 "--write-lut", str(lut_path)]) == 0
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    assert main(["analyze", "--exp", "13", "--n", "6", "--json", str(first)]) == 0
    assert main(["analyze", "--lut", str(lut_path), "--json", str(second)]) == 0
    capsys.readouterr()
    a = json.loads(first.read_text())
    b = json.loads(second.read_text())
    assert b["map"]["kind"] == "lut"
    assert b["map"]["lut_sha256"] == hashlib.sha256(lut_path.read_bytes()).hexdigest()
    assert a["results"] == b["results"]
    assert a["field"] == b["field"]


def test_analyze_ddt_csv(tmp_path, capsys):
    csv_path = tmp_path / "ddt.csv"
    assert main(["analyze", "--exp", "7", "--n", "4",
                 "--ddt-csv", str(csv_path)]) == 0
    out = capsys.readouterr().out
    assert "delta (differential uniformity): 4" in out
    with open(csv_path, newline="") as fh:
        rows = [[int(v) for v in row] for row in csv.reader(fh)]
    assert len(rows) == 15  # one row per nonzero difference
    for row in rows:
        assert len(row) == 16
        assert sum(row) == 16
        assert all(v % 2 == 0 for v in row)
    assert max(max(row) for row in rows) == 4


def test_analyze_alternate_modulus(capsys):
    assert main(["analyze", "--exp", "21", "--n", "8", "--poly", "11d"]) == 0
    out = capsys.readouterr().out
    assert "modulus 0x11d" in out
    assert "delta (differential uniformity): 4" in out


def test_analyze_usage_errors(tmp_path, capsys):
    assert main(["analyze", "--exp", "7"]) == 2          # missing --n
    assert main(["analyze", "--exp", "-1", "--n", "4"]) == 2
    assert main(["analyze", "--exp", "3", "--n", "4", "--poly", "11"]) == 2
    assert main(["analyze", "--exp", "3", "--n", "4", "--poly", "zz"]) == 2
    assert main(["analyze", "--lut", str(tmp_path / "missing.lut")]) == 2
    bad = tmp_path / "bad.lut"
    bad.write_text("n=4 poly=13\n1 2\n")
    assert main(["analyze", "--lut", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "error:" in err


def test_analyze_refuses_large_fields_without_deep(capsys):
    assert main(["analyze", "--exp", "3", "--n", "17"]) == 2
    err = capsys.readouterr().err
    assert "--deep" in err


def test_analyze_source_flags_mutually_exclusive(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "--exp", "3", "--lut", str(tmp_path / "x.lut"), "--n", "4"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["analyze"])
    assert exc.value.code == 2


def test_verify_success(capsys):
    assert main(["verify", "--k", "1"]) == 0
    out = capsys.readouterr().out
    assert "delta-sweep[k=1]" in out
    assert "mm-extremal-sum[k=1]" in out
    assert "all checks passed" in out


def test_verify_usage_errors(capsys):
    assert main(["verify", "--k", "zero"]) == 2
    assert main(["verify", "--k", ""]) == 2
    assert main(["verify", "--k", "9"]) == 2
    capsys.readouterr()


def test_verify_reports_failures(monkeypatch, capsys):
    import gf2lab.cli as cli_mod

    def fake(*args, **kwargs):
        return [CheckReport("made-up-check", 10, 3, "counterexample detail")]

    monkeypatch.setattr(cli_mod, "run_all_checks", fake)
    assert main(["verify", "--k", "1"]) == 1
    out = capsys.readouterr().out
    assert "FAILED" in out
    assert "counterexample detail" in out


def test_catalog_output(capsys):
    assert main(["catalog", "--max-n", "8"]) == 0
    out = capsys.readouterr().out
    assert "gold" in out and "kasami" in out and "inverse" in out
    assert "MISMATCH" not in out
    assert main(["catalog", "--max-n", "17"]) == 2
    capsys.readouterr()


def test_json_identical_across_thread_counts(tmp_path, capsys):
    docs = []
    for threads in ("1", "3"):
        path = tmp_path / f"t{threads}.json"
        assert main(["analyze", "--exp", "21", "--n", "8",
                     "--threads", threads, "--json", str(path)]) == 0
        doc = json.loads(path.read_text())
        doc.pop("timings_ms")
        docs.append(json.dumps(doc, sort_keys=True))
    capsys.readouterr()
    assert docs[0] == docs[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gf2lab", "analyze", "--exp", "7", "--n", "4"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "delta (differential uniformity): 4" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "gf2lab", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "analyze" in proc.stdout and "verify" in proc.stdout
