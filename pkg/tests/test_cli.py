import json

import pytest

from d2color import graphio, library
from d2color.cli import main


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in ("c5", "icosahedron", "cube", "p3"):
        p = tmp_path / f"{name}.d2g"
        graphio.dump(library.NAMED[name](), p)
        out[name] = str(p)
    return out


def test_chi2_c5(files, capsys):
    assert main(["chi2", files["c5"]]) == 0
    assert capsys.readouterr().out.strip() == "5"


def test_json_is_single_document(files, capsys):
    assert main(["--json", "chi2", files["icosahedron"]]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["chi2"] == 6 and doc["schema"] == "d2color/chi2 v1"


def test_global_flag_after_subcommand(files, capsys):
    assert main(["faces", files["cube"], "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["faces"]) == 6


def test_color_and_validate(files, tmp_path, capsys):
    col = tmp_path / "c5.col"
    assert main(["color", files["c5"], "-k", "5", "-o", str(col)]) == 0
    assert main(["validate", files["c5"], "--coloring", str(col), "-k", "5"]) == 0
    assert main(["color", files["c5"], "-k", "4"]) == 2


def test_validate_reports_conflict(files, tmp_path, capsys):
    bad = tmp_path / "bad.col"
    bad.write_text("color 0 1\ncolor 1 2\ncolor 2 1\n")
    assert main(["validate", files["p3"], "--coloring", str(bad)]) == 2
    assert "0 and 2" in capsys.readouterr().err


def test_validate_nonplanar_rotation(tmp_path):
    p = tmp_path / "k4twist.d2g"
    p.write_text("d2graph v1\nn 4\nrot 0: 1 2 3\nrot 1: 0 2 3\nrot 2: 0 1 3\nrot 3: 0 1 2\n")
    assert main(["validate", str(p)]) == 2


def test_square(files, capsys):
    assert main(["--json", "square", files["c5"]]) == 0
    assert len(json.loads(capsys.readouterr().out)["edges"]) == 10


def test_verify_lemma_all(capsys):
    assert main(["verify-lemma", "--all"]) == 0
    out = capsys.readouterr().out
    assert "VERDICT" in out and "44/44 verified" in out


def test_verify_lemma_single_json(capsys):
    assert main(["--json", "verify-lemma", "--lemma", "10"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["reports"][0]["computed_bound"] == 15


def test_verify_lemma_unknown_is_usage_error():
    assert main(["verify-lemma", "--lemma", "99"]) == 1
    assert main(["verify-lemma"]) == 1


def test_case_table(capsys):
    assert main(["discharge", "case-table"]) == 0
    assert "NO" not in capsys.readouterr().out


def test_audit_json_fractions(files, capsys):
    assert main(["--json", "discharge", "audit", files["icosahedron"]]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["total_final"] == "-12" and doc["disjunction_holds"]
    assert doc["vertices"]["0"]["final"] == "-1"


def test_gen_reproducible(tmp_path):
    a, b = tmp_path / "a.d2g", tmp_path / "b.d2g"
    assert main(["gen", "--seed", "9", "--n", "20", "-o", str(a)]) == 0
    assert main(["--seed", "9", "gen", "--n", "20", "-o", str(b)]) == 0
    assert a.read_text() == b.read_text()
    assert main(["gen", "--n", "20"]) == 1
    assert main(["gen", "--seed", "1", "--n", "2"]) == 1


def test_experiment_report(tmp_path):
    rep = tmp_path / "r.json"
    assert main(["experiment", "--count", "3", "--n-min", "10", "--n-max", "12", "--seed", "4",
                 "--report", str(rep)]) == 0
    doc = json.loads(rep.read_text())
    assert doc["sat"] == 3 and doc["ok"]


def test_experiment_budget_exit_code(tmp_path):
    assert main(["experiment", "--count", "2", "--n-min", "20", "--n-max", "22", "--seed", "4",
                 "--budget", "1", "--no-chi2"]) == 3


def test_usage_and_io_errors(files, tmp_path, capsys):
    assert main(["--bogus", "chi2", files["c5"]]) == 1
    assert main([]) == 1
    assert main(["chi2", str(tmp_path / "missing.d2g")]) == 1
    junk = tmp_path / "junk.d2g"
    junk.write_text("hello\n")
    assert main(["chi2", str(junk)]) == 1


def test_chi2_budget_exit_code(tmp_path, capsys):
    p = tmp_path / "g.d2g"
    assert main(["gen", "--seed", "5", "--n", "25", "-o", str(p)]) == 0
    assert main(["chi2", "--budget", "3", str(p)]) == 3
    assert "budget exhausted" in capsys.readouterr().err
