import json
import subprocess
import sys

import pytest

from bihcert.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_json_contains_quoted_root(capsys):
    code, out, err = run(capsys, "classify", "--family", "cp-d", "--digits", "6", "--json")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert "0.278629" in out


def test_classify_table(capsys):
    code, out, err = run(capsys, "classify", "--family", "sphere-g1", "--n", "4")
    assert code == 0 and err == ""
    assert "nonminimal biharmonic" in out and "sqrt(2)" in out


def test_output_is_deterministic(capsys):
    a = run(capsys, "sweep", "--theorem", "4.1", "--json")
    b = run(capsys, "sweep", "--theorem", "4.1", "--json")
    assert a == b and a[0] == 0 and a[2] == ""
    rows = json.loads(a[1])["rows"]
    assert [r["row"] for r in rows] == ["g=1", "g=2", "g=3", "g=4", "g=6"]


def test_sweep_table(capsys):
    code, out, err = run(capsys, "sweep", "--theorem", "7.3", "--n-max", "3")
    assert code == 0 and "tube over HP^k" in out


def test_catalog_dump(capsys):
    code, out, _ = run(capsys, "catalog-dump", "--n-max", "5")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1
    assert all({"id", "params", "spectrum", "range", "threshold"} <= set(f) for f in doc["families"])


def test_unknown_family_exits_2(capsys):
    with pytest.raises(SystemExit) as ei:
        main(["classify", "--family", "cp-z"])
    assert ei.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_bad_parameters_exit_2(capsys):
    code, out, err = run(capsys, "classify", "--family", "cp-a", "--p", "3", "--q", "1")
    assert code == 2 and "usage" in err and out == ""
    code, _, _ = run(capsys, "classify", "--family", "cp-b", "--n", "3", "--digits", "0")
    assert code == 2
    code, _, _ = run(capsys, "sweep", "--theorem", "4.1", "--n-min", "8", "--n-max", "4")
    assert code == 2


def test_endpoint_root_exits_3(capsys):
    code, _, err = run(capsys, "classify", "--family", "hp-hpk-tube", "--n", "3", "--k", "1")
    assert code == 3 and "endpoint" in err


def test_example_exit_codes(capsys):
    code, out, err = run(capsys, "verify-example81", "--m", "1")
    assert code == 0 and err == ""
    code, out, err = run(capsys, "verify-example81", "--m", "4", "--json")
    assert code == 4 and err == ""
    checks = {c["name"]: c["equal"] for c in json.loads(out)["checks"]}
    assert all(v for k, v in checks.items() if k.startswith(("(a)", "(b)", "(c)")))


def test_ym_check(capsys):
    code, out, err = run(capsys, "ym-check", "--m", "3", "--r", "3", "--trials", "40",
                         "--seed", "42", "--json")
    assert code == 0 and err == ""
    assert json.loads(out)["violations"] == 0


def test_ambient_c_override(capsys):
    code, out, _ = run(capsys, "classify", "--family", "cp-a", "--p", "0", "--q", "2",
                       "--ambient-c", "1", "--json")
    assert code == 0 and json.loads(out)["threshold"] == "2"


def test_console_module_entry():
    proc = subprocess.run([sys.executable, "-m", "bihcert.cli", "classify", "--family", "cp-b",
                           "--n", "3", "--json"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stderr == ""
    assert json.loads(proc.stdout)["nonexistence_certificate"] is not None
