import csv
import io
import json
import subprocess
import sys

import pytest

from _brute import disj_pairs, lex_first
from supersat.cli import main
from supersat.intgraph import enumerate_grid_graphs


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def fam_file(tmp_path):
    p = tmp_path / "fam.txt"
    p.write_text("4 2\n# the three-set example\n1,2\n\n3,4\n1,3\n")
    return str(p)


def test_formula_sets(capsys):
    assert run(capsys, "formula", "--sets", "-n", "6", "-k", "2", "-s", "9")[:2] == (0, "12\n")


def test_formula_perms_and_bounds(capsys):
    assert run(capsys, "formula", "--perms", "-n", "4", "-s", "12")[1] == "18\n"
    code, out, _ = run(capsys, "formula", "--bounds", "-n", "6", "-k", "2", "-s", "9", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["disj_lex"] == "12" and rep["r"] == "2" and rep["gamma"] == "1"
    assert run(capsys, "formula", "--sets", "-n", "6", "-s", "9")[0] == 2


def test_disj_sets_file(capsys, fam_file):
    assert run(capsys, "disj-sets", "--file", fam_file)[:2] == (0, "1\n")
    assert run(capsys, "disj-sets", "--file", fam_file, "--method", "naive")[1] == "1\n"


def test_lex_and_ball_round_trip(capsys, tmp_path):
    lex = str(tmp_path / "lex.txt")
    assert run(capsys, "lex", "-n", "8", "-k", "3", "-s", "30", "--out", lex)[0] == 0
    assert run(capsys, "disj-sets", "--file", lex)[1].strip() == str(disj_pairs(lex_first(8, 3, 30)))
    ball = str(tmp_path / "ball.txt")
    assert run(capsys, "ball", "-n", "8", "-k", "3", "-l", "2", "-s", "30", "--out", ball)[0] == 0
    zeta = run(capsys, "disj-sets", "--file", ball)[1]
    naive = run(capsys, "disj-sets", "--file", ball, "--method", "naive")[1]
    assert zeta == naive
    sets = [frozenset(map(int, line.split(","))) for line in open(ball).read().splitlines()[1:]]
    assert zeta.strip() == str(disj_pairs(sets))


def test_lex_to_stdout(capsys):
    code, out, _ = run(capsys, "lex", "-n", "4", "-k", "2", "-s", "3")
    assert code == 0 and out == "4 2\n1,2\n1,3\n1,4\n"


def test_perm_round_trip(capsys, tmp_path):
    p = str(tmp_path / "p.txt")
    assert run(capsys, "perm-lex", "-n", "4", "-s", "12", "--out", p)[0] == 0
    assert run(capsys, "disj-perms", "--file", p)[1] == "18\n"


def test_counterexample_table(capsys):
    code, out, _ = run(capsys, "counterexample", "-k", "5")
    assert code == 0 and "8694" in out and "8750" in out
    code, out, _ = run(capsys, "counterexample", "-k", "5", "--format", "json")
    rep = json.loads(out)
    assert rep["disj_F"] == "8694" and rep["disj_L"] == "8750" and rep["F_below_L"] is True
    code, out, _ = run(capsys, "counterexample", "-k", "12")
    assert code == 0 and "gap: 646646" in out
    assert run(capsys, "counterexample", "-k", "40")[0] == 2


def test_oracles(capsys):
    code, out, _ = run(capsys, "oracle-sets", "-n", "5", "-k", "2", "-s", "5", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["minimum"] == "2" and rep["exhaustive"] is True
    code, out, _ = run(capsys, "oracle-perms", "-n", "3", "--format", "json")
    reps = json.loads(out)
    assert code == 0 and len(reps) == 7 and all(r["optimal"] for r in reps)


def test_spectrum_and_counts(capsys):
    code, out, _ = run(capsys, "spectrum", "-n", "4", "--format", "json")
    assert code == 0 and json.loads(out)["lambda1_ok"] is True
    assert run(capsys, "spectrum", "--kneser", "6", "2")[0] == 0
    assert run(capsys, "spectrum")[0] == 2
    assert run(capsys, "count-families", "-n", "4", "-k", "2", "-s", "2")[1] == "27\n"
    code, out, _ = run(capsys, "typicality", "-n", "700", "-k", "3", "-s", "2", "--format", "json")
    assert code == 0 and json.loads(out)["meets_target"] is True


def test_shadow(capsys, tmp_path):
    f = tmp_path / "f.txt"
    f.write_text("4 3\n1,2,3\n1,2,4\n")
    code, out, _ = run(capsys, "shadow", "--file", str(f), "-s", "2", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["value"] == "5" and rep["pass"] is True


def test_intgraph_sweep_csv(capsys):
    code, out, _ = run(capsys, "intgraph", "--sweep", "5")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == len(list(enumerate_grid_graphs(5)))
    assert {"form", "k1", "k2", "k3", "k4", "p3bar", "canonical", "I", "II", "III"} <= set(rows[0])


def test_intgraph_and_prop25_spec(capsys, tmp_path):
    spec = tmp_path / "spec.txt"
    spec.write_text("100\n1 1\n1 2\n2 3\n3 4\n")
    code, out, _ = run(capsys, "intgraph", "--spec", str(spec), "-n", "100")
    row = next(csv.DictReader(io.StringIO(out)))
    assert code == 0 and row["a_in"] == "true" and row["c_refined_in"] == "true"
    code, out, _ = run(capsys, "prop25", "--spec", str(spec), "--format", "json")
    assert code == 0 and json.loads(out)["all_in"] is True


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "lex", "-n", "3", "-k", "5", "-s", "1")[0] == 2
    assert run(capsys, "disj-sets", "--file", str(tmp_path / "missing.txt"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("4 2\n1,2,3\n")
    assert run(capsys, "disj-sets", "--file", str(bad))[0] == 2
    assert run(capsys, "formula", "--sets", "-n", "6", "-k", "2", "-s", "9", "--format", "xml")[0] == 2


def test_config_file_and_env(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"format": "json"}))
    out = run(capsys, "formula", "--sets", "-n", "6", "-k", "2", "-s", "9", "--config", str(cfg))[1]
    assert json.loads(out)["disj_lex"] == "12"
    monkeypatch.setenv("SUPERSAT_FORMAT", "csv")
    out = run(capsys, "formula", "--sets", "-n", "6", "-k", "2", "-s", "9")[1]
    assert out.splitlines()[0] == "n,k,s,disj_lex"
    out = run(capsys, "formula", "--sets", "-n", "6", "-k", "2", "-s", "9", "--format", "plain")[1]
    assert out == "12\n"
    cfg.write_text(json.dumps({"colour": "red"}))
    assert run(capsys, "formula", "--sets", "-n", "6", "-k", "2", "-s", "9", "--config", str(cfg))[0] == 2


def test_verify_all_subset_is_deterministic(capsys):
    a = run(capsys, "verify-all", "--only", "1,5,8", "--format", "json")
    b = run(capsys, "verify-all", "--only", "1,5,8", "--format", "json")
    assert a[0] == b[0] == 0
    strip = lambda s: [{k: v for k, v in r.items() if k != "seconds"} for r in json.loads(s)]
    assert strip(a[1]) == strip(b[1])


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "supersat.cli", "formula", "--sets", "-n", "6", "-k", "2", "-s", "9"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "12\n"
    res = subprocess.run([sys.executable, "-m", "supersat.cli", "frobnicate"], capture_output=True, text=True)
    assert res.returncode == 2
