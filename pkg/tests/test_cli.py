"""CLI verbs, output formats, and exit codes."""

import io
import json
import sys

import pytest

from crdom.cli import main
from crdom.graph import empty, to_graph6


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_text(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["compute"], "Cl\nBw\n@\n")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("Cl n=4 m=4 cr=2 gamma=2 witness={0,1}")
    assert "cr=0 gamma=1 witness={0}" in lines[1]
    assert lines[2].startswith("@ n=1 m=0 cr=0 gamma=1")


def test_compute_json(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["--json", "compute"], "Cl\n")
    rec = json.loads(out)
    assert code == 0
    assert rec == {
        "graph6": "Cl",
        "n": 4,
        "m": 4,
        "cr": 2,
        "gamma": 2,
        "witness": [0, 1],
        "gamma_set_count": 6,
    }


def test_compute_parse_error_continues(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["compute"], "!!!bogus\nBw\n")
    assert code == 1
    assert "<stdin>:1" in err
    assert out.startswith("Bw ")  # later lines still processed


def test_compute_capacity_error(capsys, monkeypatch):
    big = to_graph6(empty(25))  # above the default solver cap of 24
    code, _, err = run(capsys, monkeypatch, ["compute"], big + "\n")
    assert code == 2
    assert "cap" in err


def test_compute_from_file(tmp_path, capsys, monkeypatch):
    p = tmp_path / "graphs.g6"
    p.write_text("Bw\n")
    code, out, _ = run(capsys, monkeypatch, ["compute", str(p)])
    assert code == 0 and out.startswith("Bw ")
    code, _, err = run(capsys, monkeypatch, ["compute", str(tmp_path / "missing.g6")])
    assert code == 1


def test_assess(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["assess", "--set", "0", "1"], "Cl\n")
    assert code == 0
    assert "dominating=True cr_of_set=2 influence=6" in out


def test_formula_statuses(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch,
        ["--json", "formula", "--quantity", "M", "--n", "7", "--k", "2", "--r", "4"],
    )
    assert code == 0 and json.loads(out)["value"] == 7
    code, out, _ = run(
        capsys, monkeypatch,
        ["formula", "--quantity", "m", "--n", "5", "--k", "2", "--r", "3"],
    )
    assert code == 0 and "not-covered" in out
    code, out, _ = run(
        capsys, monkeypatch,
        ["formula", "--quantity", "M", "--n", "9", "--k", "1", "--r", "7"],
    )
    assert code == 0 and "zero-by-nonexistence" in out
    code, _, err = run(
        capsys, monkeypatch,
        ["formula", "--quantity", "M", "--n", "1", "--k", "0", "--r", "1"],
    )
    assert code == 3


def test_formula_flag_validation(capsys, monkeypatch):
    with pytest.raises(SystemExit):
        main(["formula", "--quantity", "M", "--n", "7", "--k", "2", "--m-edges", "4"])
    with pytest.raises(SystemExit):
        main(["formula", "--quantity", "D", "--n", "7", "--k", "2", "--r", "4"])
    with pytest.raises(SystemExit):
        main(["formula", "--n", "7", "--k", "2", "--r", "4"])


def test_construct_check(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch,
        ["construct", "--quantity", "M", "--n", "5", "--k", "0", "--r", "2", "--check"],
    )
    assert code == 0 and "check=ok" in out
    code, out, _ = run(
        capsys, monkeypatch,
        ["--json", "construct", "--quantity", "D", "--n", "8", "--k", "2",
         "--m-edges", "8", "--check"],
    )
    rec = json.loads(out)
    assert code == 0 and rec["agree"] and rec["m"] == 8 and rec["gamma"] == 4


def test_construct_uncovered_regime(capsys, monkeypatch):
    code, _, err = run(
        capsys, monkeypatch,
        ["construct", "--quantity", "M", "--n", "9", "--k", "1", "--r", "7"],
    )
    assert code == 3


def test_construct_named(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch, ["construct", "--name", "G1", "--n", "8", "--check"]
    )
    assert code == 0 and "check=ok" in out


def test_oracle_table(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["--json", "oracle", "--n", "4"])
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    cell = next(r for r in recs if r["table"] == "edges" and r["cr"] == 2)
    assert cell["max"] == 4 and cell["gamma"] == 2
    code, _, err = run(capsys, monkeypatch, ["oracle", "--n", "8"])
    assert code == 2


def test_verify(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch,
        ["verify", "--theorem", "Mn0r", "--n-min", "5", "--n-max", "6"],
    )
    assert code == 0 and "PASS" in out
    code, out, _ = run(
        capsys, monkeypatch,
        ["--json", "verify", "--theorem", "eventhm", "--n-min", "4", "--n-max", "4"],
    )
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and recs[-1] == {"theorem": "eventhm", "passed": True}
    code, _, err = run(
        capsys, monkeypatch,
        ["verify", "--theorem", "dn2mlarge", "--n-min", "10", "--n-max", "10",
         "--mode", "formula-vs-oracle"],
    )
    assert code == 2
