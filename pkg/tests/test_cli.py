import csv
import io
import json
import os
import subprocess
import sys

import pytest

from quatsphere import cli


def run(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dim_reports_dimension(capsys):
    code, out, _ = run(["dim"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["passed"] is True
    assert rep["suites"][0]["observed"]["spectral_dimension"] == 7
    assert rep["config"]["rank"] == 2


def test_spectrum_rows(capsys):
    code, out, _ = run(["spectrum", "--k-max", "2"], capsys)
    assert code == 0
    rows = json.loads(out)["suites"][0]["observed"]["rows"]
    assert [(r["k"], r["multiplicity"]) for r in rows] == [(0, 1), (1, 13), (2, 76)]


def test_spectrum_csv(capsys):
    code, out, _ = run(["spectrum", "--k-max", "2", "--format", "csv"], capsys)
    assert code == 0
    assert list(csv.reader(io.StringIO(out))) == [["k", "multiplicity"], ["0", "1"], ["1", "13"], ["2", "76"]]


def test_big_integers_are_strings(capsys):
    code, out, _ = run(["spectrum", "--rank", "6", "--k-max", "300"], capsys)
    assert code == 0
    rows = json.loads(out)["suites"][0]["observed"]["rows"]
    last = rows[-1]["multiplicity"]
    assert isinstance(last, str) and int(last) > 2**53
    assert isinstance(rows[1]["multiplicity"], int)


def test_json_helpers():
    from fractions import Fraction

    assert cli.to_jsonable({"a": Fraction(1, 3), "b": 2**60, "c": (1, 2.5)}) == {
        "a": "1/3", "b": str(2**60), "c": [1, 2.5]}


def test_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(["supnorm", "--grid", "80", "--seed", "5", "--out", str(a)]) == 0
    assert cli.main(["supnorm", "--grid", "80", "--seed", "5", "--out", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_env_overrides(monkeypatch, tmp_path, capsys):
    target = tmp_path / "env.json"
    monkeypatch.setenv("QUATSPHERE_OUT", str(target))
    monkeypatch.setenv("QUATSPHERE_SEED", "11")
    assert cli.main(["zeta"]) == 0
    capsys.readouterr()
    assert json.loads(target.read_text())["config"]["seed"] == 11


@pytest.mark.parametrize("args", [
    ["dim", "--rank", "1"],
    ["bogus"],
    ["zeta", "--format", "csv"],
    ["dim", "--k-max", "5"],
    ["hwv", "--lambda-cap", "0"],
])
def test_usage_errors(args, capsys):
    assert cli.main(args) == 2


def test_failure_exit_code(monkeypatch, capsys):
    from quatsphere import acceptance

    broken = acceptance.CriterionResult(8, "highest weight vectors", False, "exact", "test")
    monkeypatch.setitem(acceptance.CRITERIA, 8, lambda **_: broken)
    code, out, err = run(["hwv", "--lambda-cap", "1"], capsys)
    assert code == 1
    assert "criterion 8" in err
    assert json.loads(out)["failures"] == ["criterion 8: highest weight vectors"]


def test_hwv_and_path_subcommands(capsys):
    code, out, _ = run(["hwv", "--rank", "3", "--lambda-cap", "2"], capsys)
    assert code == 0
    fams = json.loads(out)["suites"][0]["observed"]["families"]
    assert all(f["rank"] == f["expected_rank"] for f in fams)
    code, out, _ = run(["path", "--gamma-cap", "4"], capsys)
    assert code == 0
    assert json.loads(out)["suites"][0]["observed"]["equivariant_steps"]["c"] == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quatsphere.cli", "spectrum", "--k-max", "1",
                           "--format", "csv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "1,13"
