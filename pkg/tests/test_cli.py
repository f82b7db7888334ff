import json
import subprocess
import sys

import pytest

from cyclic_descents import cli, gens
from cyclic_descents.errors import DomainError


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fibers_staircase_both_routes(capsys):
    code, out, _ = run(capsys, "fibers", "3,2,1", "--route", "both", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["agree"] is True
    table = {tuple(e["J"]): e["m"] for e in data["entries"]}
    assert len(table) == 14 and sum(table.values()) == 16
    assert table[(1, 3, 5)] == table[(2, 4, 6)] == 2


def test_fibers_two_by_two_formats(capsys):
    code, out, _ = run(capsys, "fibers", "2,2")
    assert code == 0
    assert out == "shape 2,2, route formula\nn = 4\n{1,3}: 1\n{2,4}: 1\n"
    code, out, _ = run(capsys, "fibers", "2,2", "--format", "csv", "--route", "inner")
    assert out == 'J,m\n"1 3",1\n"2 4",1\n'


def test_fibers_errors(capsys):
    code, _, err = run(capsys, "fibers", "5")
    assert code == 2 and "not extendable" in err and "connected ribbon" in err
    code, _, err = run(capsys, "fibers", "1,2")
    assert code == 2 and err.startswith("error:")
    code, _, err = run(capsys, "fibers", "3,2,1", "--limit-syt", "5")
    assert code == 3 and "resource limit" in err


def test_extend_json(capsys):
    code, out, _ = run(capsys, "extend", "3,2,1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["valid"] and len(data["tableaux"]) == 16
    assert sorted(data["p"]) == list(range(1, 17))
    for t in data["tableaux"]:
        assert [j for j in t["cdes"] if j < 6] == t["des"]


def test_extend_text_and_csv(capsys):
    code, out, _ = run(capsys, "extend", "2,2")
    assert code == 0
    assert out.splitlines()[0] == "shape 2,2: 2 tableaux"
    assert out.splitlines()[-1] == "p orbits: 2"
    code, out, _ = run(capsys, "extend", "2,2", "--format", "csv")
    assert out.splitlines()[0] == "index,rows,des,cdes,p"
    assert len(out.splitlines()) == 3


def test_extend_ribbon_refused(capsys):
    code, _, err = run(capsys, "extend", "3,3/2")
    assert code == 2 and "not extendable" in err


@pytest.mark.parametrize("suite,max_n", [("theorem1", 7), ("theorem2", 5), ("prop25", 5), ("gw", 6)])
def test_verify_suites_pass(capsys, suite, max_n):
    code, out, _ = run(capsys, "verify", suite, "--max-n", str(max_n))
    assert code == 0
    assert out and all(line.startswith("PASS") for line in out.splitlines())


def test_verify_all_json(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-n", "5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["max_n"] == 5
    assert {r["suite"] for r in data["results"]} == set(cli.SUITES)
    assert all(r["ok"] and r["cases"] > 0 for r in data["results"])


def test_verify_failure_reports_counterexample(capsys, monkeypatch):
    monkeypatch.setattr(gens, "check_theorem_2", lambda n: n != 4)
    code, out, _ = run(capsys, "verify", "theorem2", "--max-n", "6", "--format", "json")
    assert code == 1
    (result,) = json.loads(out)["results"]
    assert not result["ok"] and result["counterexample"] == {"n": 4} and result["cases"] == 3


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "theorem2", "--max-n", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "suite,check,ok,cases"
    assert out.splitlines()[1].endswith(",1,3")


def test_max_n_bounds(capsys):
    code, _, err = run(capsys, "verify", "gw", "--max-n", "17")
    assert code == 2 and "--max-n" in err
    with pytest.raises(DomainError):
        cli.RunConfig(max_n=0)


def test_output_is_deterministic(capsys):
    first = run(capsys, "extend", "4,3,2/1,1", "--format", "json")
    second = run(capsys, "extend", "4,3,2/1,1", "--format", "json")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cyclic_descents", "fibers", "(1^2)+(3)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "shape 4,1,1/1, route formula"
