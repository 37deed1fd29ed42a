import csv
import io
import json
import subprocess
import sys

import pytest

from cyclo2p.cli import EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse rejections
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("p, g, bits", [("5", "3", "1001101100"), ("7", "3", "10010110001011")])
def test_generate(capsys, p, g, bits):
    code, out, _ = run(capsys, "generate", "--p", p, "--g", g)
    assert code == EXIT_OK and out == bits + "\n"


@pytest.mark.parametrize("argv", [["generate", "--p", "4"], ["generate", "--p", "113", "--g", "7"]])
def test_generate_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_USAGE and out == "" and err


def test_missing_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == EXIT_USAGE


@pytest.mark.parametrize("p, g, lc", [("17", "3", 34), ("13", "7", 14)])
def test_analyze_linear(capsys, p, g, lc):
    code, out, _ = run(capsys, "analyze", "--p", p, "--g", g, "--r", "5")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["linear"]["lc"] == lc and doc["linear"]["methods_agree"]


def test_analyze_adic_gcd(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "5", "--g", "3")
    doc = json.loads(out)
    assert doc["adic"]["gcd_total"] == "31" and doc["adic"]["phi2_floor"] == 5
    assert doc["sequence"]["bits"] == "1001101100"
    assert doc["autocorr"]["predicted"] == "NOT_COVERED"


@pytest.mark.parametrize("r", ["5", "3"])
def test_analyze_rejects_bad_r(capsys, r):
    code, _, err = run(capsys, "analyze", "--p", "5", "--r", r)
    assert code == EXIT_USAGE and "r must" in err


def test_analyze_lemmas_and_text(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "13", "--r", "5", "--lemmas")
    lem = json.loads(out)["lemmas"]
    assert all(lem["class_lemmas"].values()) and lem["lemma9"] == {"s2_identity": True, "gp_identity": True}
    assert lem["field"]["lemma8_agrees"] and lem["field"]["rational"] is False
    code, out, _ = run(capsys, "analyze", "--p", "13", "--r", "5", "--format", "text")
    assert code == EXIT_OK and "linear complexity over F_5" in out and "2-adic" in out


def test_raw_bits_round_trip(capsys, tmp_path):
    _, bits, _ = run(capsys, "generate", "--p", "7")
    _, from_p, _ = run(capsys, "analyze", "--p", "7", "--r", "5")
    _, from_bits, _ = run(capsys, "analyze", "--bits", bits.strip(), "--r", "5")
    path = tmp_path / "s.txt"
    path.write_text(bits)
    _, from_file, _ = run(capsys, "analyze", "--bits-file", str(path), "--r", "5")
    a, b, c = json.loads(from_p), json.loads(from_bits), json.loads(from_file)
    assert b == c
    assert a["linear"]["lc"] == b["linear"]["lc"] and a["adic"]["s2"] == b["adic"]["s2"]
    assert a["autocorr"]["spectrum"] == b["autocorr"]["spectrum"]


def test_raw_bits_errors(capsys):
    assert run(capsys, "analyze", "--bits", "10a1")[0] == EXIT_USAGE
    assert run(capsys, "analyze", "--bits", "1011", "--g", "3")[0] == EXIT_USAGE


def test_analyze_is_deterministic(capsys):
    outs = {run(capsys, "analyze", "--p", "11", "--r", "7", "--lemmas")[1] for _ in range(2)}
    assert len(outs) == 1


def test_scan_adic_concordance(capsys):
    code, out, _ = run(capsys, "scan", "--p-min", "3", "--p-max", "50", "--checks", "adic")
    doc = json.loads(out)
    assert code == EXIT_OK
    for row in doc["rows"]:
        assert row["matches_theorem2"] == (row["p"] % 8 in (1, 7))
    assert doc["summary"]["adic"]["3"]["discordant"] == doc["summary"]["adic"]["3"]["rows"]


def test_scan_autocorr_table(capsys):
    code, out, _ = run(capsys, "scan", "--p-max", "200", "--checks", "autocorr", "--jobs", "2")
    rows = json.loads(out)["rows"]
    for row in rows:
        if row["p"] % 8 in (1, 3):
            assert row["matches"] is True
        else:
            assert row["matches"] is None


def test_scan_jobs_do_not_change_output(capsys):
    args = ["scan", "--p-max", "40", "--checks", "adic,autocorr,lc", "--r", "5,7"]
    assert run(capsys, *args)[1] == run(capsys, *args, "--jobs", "3")[1]


def test_scan_empty_range(capsys):
    code, out, _ = run(capsys, "scan", "--p-min", "24", "--p-max", "28")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["rows"] == [] and doc["summary"] == {}
    code, out, _ = run(capsys, "scan", "--p-min", "24", "--p-max", "28", "--format", "csv")
    assert code == EXIT_OK and out == ""


def test_scan_csv_and_figures(capsys, tmp_path):
    target = tmp_path / "scan.csv"
    code, out, _ = run(
        capsys, "scan", "--p-max", "30", "--r", "5,7", "--out", str(target), "--format", "csv", "--figures"
    )
    assert code == EXIT_OK
    written = json.loads(out)["written"]
    assert str(target) in written
    for check in ("lc", "adic", "autocorr"):
        png = tmp_path / f"scan_{check}.png"
        assert str(png) in written and png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    rows = list(csv.DictReader(io.StringIO(target.read_text())))
    assert {r["check"] for r in rows} == {"lc", "adic", "autocorr", "lemmas"}
    lc_rows = [r for r in rows if r["check"] == "lc"]
    assert all(r["bm"] == r["gcd"] == r["lc"] for r in lc_rows)


@pytest.mark.parametrize(
    "argv",
    [
        ["scan", "--p-max", "600"],
        ["scan", "--r", "4"],
        ["scan", "--checks", "bogus"],
        ["scan", "--p-min", "2"],
        ["scan", "--jobs", "0"],
        ["scan", "--figures"],
    ],
)
def test_scan_argument_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE and err


def test_scan_unwritable_path(capsys, tmp_path):
    code, _, err = run(capsys, "scan", "--p-max", "10", "--checks", "adic", "--out", str(tmp_path / "no" / "x.json"))
    assert code == EXIT_USAGE and "cannot write" in err


def test_consistency_failure_exit_code(capsys, monkeypatch):
    from cyclo2p import report
    from cyclo2p.errors import ConsistencyError

    def broken(*_a, **_k):
        raise ConsistencyError("forced")

    monkeypatch.setattr(report, "adic_complexity", broken)
    code, _, err = run(capsys, "analyze", "--p", "5")
    assert code == EXIT_INTERNAL and "forced" in err


def test_verify_paper_text_and_json(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == EXIT_OK and "DISCREPANCY" in out and "summary:" in out
    code, out, _ = run(capsys, "verify-paper", "--format", "json")
    doc = json.loads(out)
    labels = [r["label"] for r in doc["rows"]]
    assert labels == [f"Example {i}" for i in range(1, 9)] + [
        "Table 1 (p = 1 mod 8)",
        "Table 1 (p = 3 mod 8)",
    ]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cyclo2p", "generate", "--p", "5"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "1001101100\n"
