"""Command line interface: construction, reports, exit codes."""
import json

import pytest

from tracealg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_construct_and_report_exact(tmp_path, capsys):
    path = str(tmp_path / "e3.json")
    code, _ = run(capsys, "construct", "ealg", "--n", "3", "-o", path)
    assert code == 0
    doc = json.load(open(path))
    assert doc["dim"] == 3
    code, out = run(capsys, "report", "--in", path, "--suite", "exact")
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"] is True and rep["schema"] == 1


def test_report_failure_exit_code(tmp_path, capsys):
    path = str(tmp_path / "t.json")
    assert run(capsys, "construct", "talg", "--n", "3", "--alpha", "1/2",
               "-o", path)[0] == 0
    code, out = run(capsys, "report", "--in", path, "--suite", "exact")
    assert code == 1
    assert json.loads(out)["verdict"] is False
    # but the killing form is invariant at alpha = 1/2
    code, out = run(capsys, "report", "--in", path, "--suite",
                    "killing-invariant")
    assert code == 0


def test_einstein_suite_reports_kappa(tmp_path, capsys):
    path = str(tmp_path / "h.json")
    assert run(capsys, "construct", "herm0", "--n", "3", "--level", "c",
               "-o", path)[0] == 0
    code, out = run(capsys, "report", "--in", path, "--suite", "einstein")
    assert code == 0
    assert "5/2" in json.loads(out)["witnesses"]


def test_const_sect_suite(tmp_path, capsys):
    path = str(tmp_path / "e4.json")
    run(capsys, "construct", "ealg", "--n", "4", "-o", path)
    code, out = run(capsys, "report", "--in", path, "--suite", "const-sect")
    assert code == 0
    assert "-1/3" in json.loads(out)["witnesses"]


def test_idempotents_command(tmp_path, capsys):
    path = str(tmp_path / "e3.json")
    run(capsys, "construct", "ealg", "--n", "3", "-o", path)
    code, out = run(capsys, "idempotents", "--in", path, "--trials", "400")
    assert code == 0
    assert json.loads(out)["count"] == 7


def test_decompose_command(tmp_path, capsys):
    base = str(tmp_path / "e2.json")
    prod = str(tmp_path / "t22.json")
    run(capsys, "construct", "ealg", "--n", "2", "-o", base)
    code, _ = run(capsys, "construct", "tensor", "--base", base,
                  "--base2", base, "-o", prod)
    assert code == 0
    code, out = run(capsys, "decompose", "--in", prod, "--seed", "7")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "decomposed"
    assert sorted(doc["component_dims"]) == [2, 2]


def test_check_command(tmp_path, capsys):
    path = str(tmp_path / "e3.json")
    run(capsys, "construct", "ealg", "--n", "3", "-o", path)
    code, out = run(capsys, "check", "--in", path)
    assert code == 0
    doc = json.loads(out)
    assert set(doc["reports"]) == {"exact", "killing-invariant",
                                   "ricci-invariant"}
    assert all(r["verdict"] for r in doc["reports"].values())


def test_usage_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    assert main(["construct", "nope"]) == 2
    assert main(["report", "--in", str(tmp_path / "missing.json"),
                 "--suite", "exact"]) == 2


def test_json_round_trip_via_cli(tmp_path, capsys):
    p1 = str(tmp_path / "a.json")
    run(capsys, "construct", "talg", "--n", "4", "--alpha=-1/3", "-o", p1)
    doc = json.load(open(p1))
    assert doc["scalar"] == "rational"
    assert doc["symmetry"] == "commutative"
    # structure rows are [i, j, k, value] with i <= j
    assert all(row[0] <= row[1] for row in doc["structure"])
