import json
import subprocess
import sys
from pathlib import Path

import pytest

import steinitz
from steinitz.cli import main

TABLES = Path(steinitz.__file__).parent / "tables"
S3 = "perm:3:(1 2),(1 2 3)"


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def run_json(capsys, *argv):
    status, out, err = run(capsys, *argv)
    return status, json.loads(out), err


def test_f21_bound_golden(capsys):
    status, report, _ = run_json(capsys, "bound", "--group", "metacyclic:7,3,2", "--kappa", "full")
    assert status == 0
    assert report == {
        "group": "metacyclic:7,3,2",
        "kappa": [2, 5],
        "squared": False,
        "factors": [
            {"m": 3, "field": {"m": 3, "fixer_gens": [], "degree": 2}, "exponent": 7},
            {"m": 7, "field": {"m": 7, "fixer_gens": [2], "degree": 2}, "exponent": 9},
        ],
    }


def test_group_report(capsys):
    status, report, _ = run_json(capsys, "group", "--group", "abelian:2")
    assert status == 0
    assert report["order"] == 2 and report["sylow2"] == "cyclic_nontrivial"
    assert report["rho_in_AG"] is False
    assert [c["rep_order"] for c in report["classes"]] == [1, 2]


def test_theta_regular_c2(capsys):
    status, report, _ = run_json(capsys, "theta", "--group", "abelian:2", "--char", "regular")
    assert status == 0
    assert report["status"] == "not integral" and not report["in_AG"]
    assert [t["coeff"] for t in report["theta"]] == ["0/1", "1/2"]
    _, report, _ = run_json(capsys, "theta", "--group", "abelian:2", "--char", "2*regular")
    assert report["integral"] and [t["coeff"] for t in report["theta"]] == ["0/1", "1/1"]


def test_theta_s3_closed_form(capsys):
    _, report, _ = run_json(capsys, "theta", "--group", S3)
    assert {t["rep_order"]: t["coeff"] for t in report["theta"]} == {1: "0/1", 2: "3/2", 3: "2/1"}


def test_ag_and_sg(capsys):
    _, report, _ = run_json(capsys, "ag", "--group", S3)
    assert report["index"] == 2 == report["abelianization_order"]
    _, report, _ = run_json(capsys, "sg", "--group", "abelian:2")
    assert report["basis"] == [[0, 1]] and report["coordinates"] == "elements"
    _, report, _ = run_json(capsys, "sg", "--group", S3, "--classes")
    assert report["coordinates"] == "classes" and len(report["basis"][0]) == 3


def test_compare_long(capsys):
    _, report, _ = run_json(capsys, "compare-long", "--group", "abelian:2,4")
    assert (report["bound_exponent"], report["long_exponent"], report["tight"]) == (1, 2, False)


def test_verify_passes(capsys):
    status, report, _ = run_json(capsys, "verify", "--group", S3, "--samples", "20")
    assert status == 0 and report["passed"]
    assert all(c["passed"] for c in report["checks"])


def test_ingest_bundled_table(capsys):
    path = str(TABLES / "s4.json")
    status, report, _ = run_json(capsys, "ingest", "--table", path, "--group", "perm:4:(1 2),(1 2 3 4)")
    assert status == 0 and report["validated"] and sorted(report["degrees"]) == [1, 1, 2, 3, 3]


def test_ingest_rejects_bad_table(capsys, tmp_path):
    doc = json.loads((TABLES / "s3.json").read_text())
    doc["characters"][2][1] = {"conductor": 1, "terms": [[-2, 1, 0]]}
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    status, report, err = run_json(capsys, "ingest", "--table", str(bad))
    assert status == 1 and report["error"]["code"] == "table_validation_failed"
    assert "row orthogonality" in report["error"]["message"] and err


@pytest.mark.parametrize(
    "argv, code, status",
    [
        (["group"], "missing_group", 2),
        (["group", "--group", "bogus:1"], "malformed_group_spec", 2),
        (["theta", "--group", "abelian:2", "--char", "irr:9"], "malformed_character", 2),
        (["theta", "--group", "abelian:2", "--char", "1,x"], "malformed_character", 2),
        (["bound", "--group", "abelian:6", "--kappa", "gens=2"], "kappa_mismatch", 2),
        (["compare-long", "--group", S3], "not_abelian", 2),
        (["ingest"], "missing_table", 2),
        (["ingest", "--table", "/nonexistent/table.json"], "unreadable_file", 2),
    ],
)
def test_error_codes(capsys, argv, code, status):
    got, report, err = run_json(capsys, *argv)
    assert got == status
    assert report["error"]["code"] == code
    assert code in err


def test_text_format_and_output_file(capsys, tmp_path):
    status, out, _ = run(capsys, "bound", "--group", "abelian:2", "--kappa", "trivial", "--format", "text")
    assert status == 0
    assert out.splitlines() == [
        "abelian:2  kappa gens [] (bounds squares of classes)",
        "  N(K(s)/K)^1  m=2  degree 1  fixer gens []",
    ]
    target = tmp_path / "r.json"
    status, out, _ = run(capsys, "bound", "--group", "abelian:3", "--output", str(target))
    assert status == 0 and out == ""
    assert json.loads(target.read_text())["factors"][0]["exponent"] == 1


def test_output_is_deterministic(capsys):
    argv = ["verify", "--group", "metacyclic:5,2,4", "--samples", "30", "--seed", "7"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    _, threaded, _ = run(capsys, *argv, "--workers", "4")
    assert first == second == threaded


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "steinitz", "bound", "--group", "metacyclic:7,3,2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert [f["exponent"] for f in json.loads(proc.stdout)["factors"]] == [7, 9]
