import json

import pytest

from chevcount.cli import main


def run(capsys, *argv):
    code = main(list(argv) + ["--format", "json"])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_kcount_examples(capsys):
    assert run(capsys, "kcount", "--family", "gl", "--n", "2", "--q", "3")[1]["result"] == {"k": "8"}
    assert run(capsys, "kcount", "--family", "sp", "--n", "4", "--q", "3")[1]["result"] == {"k": "34"}
    code, rec = run(capsys, "kcount", "--family", "gl", "--n", "2", "--symbolic")
    assert code == 0 and rec["result"] == {"k_poly": [-1, 0, 1]}


def test_kcount_variants(capsys):
    assert run(capsys, "kcount", "--family", "so", "--n", "4", "--q", "3", "--type", "-")[1]["result"]["k"] == "14"
    assert run(capsys, "kcount", "--family", "between", "--n", "2", "--q", "5", "--j", "2")[1]["result"]["k"] == "18"
    rec = run(capsys, "kcount", "--family", "e8", "--n", "8", "--q", "2")[1]
    assert rec["result"] == {"k": "1302", "label": "upper_bound"}
    # big values stay exact
    rec = run(capsys, "kcount", "--family", "gl", "--n", "60", "--q", "9")[1]
    assert int(rec["result"]["k"]) > 9**59


def test_round_trip(capsys):
    code, rec = run(capsys, "kcount", "--family", "gu", "--n", "3", "--q", "2")
    assert json.loads(json.dumps(rec)) == rec
    assert rec["command"] == "kcount" and rec["status"] == 0 and rec["params"]["n"] == 3


def test_centralizer(capsys):
    code, rec = run(capsys, "centralizer", "--family", "gl", "--n", "2", "--q", "2", "--min")
    assert code == 0
    assert rec["result"]["min_centralizer"] == "2"
    assert abs(rec["result"]["bound"] - 0.2846) < 1e-4
    code, rec = run(capsys, "centralizer", "--family", "gl", "--n", "3", "--q", "2", "--class", "1:p:3")
    assert rec["result"] == {"centralizer": "4"}


def test_oracle_reports(capsys):
    assert run(capsys, "oracle", "--group", "sp", "--dim", "4", "--q", "3", "--report", "classes")[1]["result"] == \
        {"k": 34, "semisimple": 9}
    assert run(capsys, "oracle", "--group", "o-minus", "--dim", "4", "--q", "2", "--report", "unipotent")[1][
        "result"] == {"count": "56"}
    rec = run(capsys, "oracle", "--group", "sym", "--dim", "5", "--report", "derangement")[1]
    assert rec["result"]["proportion"] == "11/30"


def test_verify_exit_codes(capsys):
    code, rec = run(capsys, "verify", "--suite", "polynomiality", "--max-n", "6")
    assert code == 0 and rec["result"]["worst"] == "pass"
    code, rec = run(capsys, "verify", "--suite", "bounds", "--max-n", "3", "--max-q", "3")
    assert code == 1  # k(SL(2,3)) breaks the additive SL bound


def test_table_and_csv(capsys):
    assert main(["kcount", "--family", "gl", "--n", "2", "--q", "3"]) == 0
    assert "8" in capsys.readouterr().out
    assert main(["kcount", "--family", "gl", "--n", "2", "--q", "3", "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines() == ["k", "8"]


@pytest.mark.parametrize("argv,code", [
    (["kcount", "--family", "nope", "--n", "2", "--q", "3"], 2),
    (["kcount", "--family", "gl", "--n", "2", "--q", "6"], 2),
    (["kcount", "--family", "o", "--n", "4", "--q", "3"], 2),
    (["kcount"], 2),
    (["frobnicate"], 2),
    (["oracle", "--group", "gl", "--dim", "4", "--q", "3", "--report", "order"], 3),
    (["kcount", "--family", "gl", "--n", "500", "--q", "2"], 3),
])
def test_error_codes(capsys, argv, code):
    assert main(argv) == code
