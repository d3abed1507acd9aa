import json

import jsonschema
import pytest

from hermint.cli import OUTPUT_SCHEMA, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, OUTPUT_SCHEMA)
    return code, doc


def test_hvalue_recurrence_check(capsys):
    code, doc = run_json(capsys, "hvalue", "2", "2", "1", "1", "--method", "recurrence", "--check")
    assert code == 0
    assert doc["rows"][0]["value"] == "7/1" and doc["rows"][0]["agree"] is True


@pytest.mark.parametrize("method", ["oracle", "closed", "recurrence", "gf"])
def test_hvalue_odd_parity(capsys, method):
    code, doc = run_json(capsys, "hvalue", "1", "1", "1", "--method", method)
    assert code == 0 and doc["rows"][0]["value"] == "0/1"


def test_hvalue_closed_single(capsys):
    code, doc = run_json(capsys, "hvalue", "4", "--method", "closed")
    assert doc["rows"][0]["value"] == "3/1"


def test_hvalue_usage_errors(capsys):
    assert run(capsys, "hvalue", "1", "2", "3", "4", "5", "--method", "closed")[0] == 2
    assert run(capsys, "hvalue", "4", "4", "--method", "gf", "--order", "4")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["hvalue"])
    assert info.value.code == 2


def test_pk_text(capsys):
    code, out, _ = run(capsys, "pk", "--k", "0")
    assert code == 0 and out == "0 0 0 : 1\n"
    code, out, _ = run(capsys, "pk", "--k", "1")
    assert len(out.strip().splitlines()) == 6


@pytest.mark.parametrize("k", [1, 5])
def test_pk_compare_paper(capsys, k):
    code, doc = run_json(capsys, "pk", "--k", str(k), "--compare-paper")
    assert code == 0 and not doc["failures"]


def test_pk_limit(capsys):
    assert run(capsys, "pk", "--k", "9")[0] == 2


def test_verify_claim1_warns_once(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "claim1", "--max-index", "12")
    assert code == 0
    assert all(r["status"] == "pass" for r in doc["rows"])
    assert len(doc["warnings"]) == 1 and "(1,1)" in doc["warnings"][0]


def test_verify_claim2(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "claim2", "--max-index", "8", "--k", "4")
    assert code == 0 and not doc["failures"]


def test_verify_identities(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "identities", "--max-index", "6", "--k", "3")
    assert code == 0
    assert any("six-fold" in w for w in doc["warnings"])


def test_verify_recursion(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "recursion", "--max-index", "5", "--k", "3")
    assert code == 0 and not doc["failures"]


def test_gfcheck(capsys):
    code, doc = run_json(capsys, "gfcheck", "--order", "6")
    assert code == 0 and [r["mismatches"] for r in doc["rows"]] == [0, 0, 0, 0]


def test_dn(capsys):
    code, doc = run_json(capsys, "dn", "--n", "0", "--size", "2")
    assert doc["rows"][0]["value"] == "-2/1"
    code, doc = run_json(capsys, "dn", "--n", "0..16", "--size", "4")
    assert code == 0 and len(doc["rows"]) == 17
    assert all(r["paths_agree"] for r in doc["rows"])


def test_asym(capsys):
    code, doc = run_json(capsys, "asym", "--quantity", "H_nn0/H_n+1,n-1,0", "--n", "7")
    assert doc["rows"][0]["exact_value"] == "-1/1" and doc["rows"][0]["predicted"] == -1
    code, doc = run_json(capsys, "asym", "--quantity", "H_n", "--n", "64,128,256")
    errs = [r["abs_error"] for r in doc["rows"]]
    assert errs[0] > errs[1] > errs[2]
    assert run(capsys, "asym", "--quantity", "bogus")[0] == 2


def test_table_check(capsys):
    code, out, _ = run(capsys, "table", "--max-index", "4", "--check")
    assert code == 0
    assert out.splitlines()[0] == "n,m,l,k,value,agree"


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "recursion", "--max-index", "4", "--k", "2", "--seed", "7"],
    ["dn", "--n", "0..6"],
    ["table", "--max-index", "3"],
])
def test_deterministic_and_jobs_independent(capsys, argv):
    _, a, _ = run(capsys, *argv, "--format", "json")
    _, b, _ = run(capsys, *argv, "--format", "json")
    _, c, _ = run(capsys, *argv, "--format", "json", "--jobs", "2")
    assert a == b
    da, dc = json.loads(a), json.loads(c)
    assert da["rows"] == dc["rows"] and da["warnings"] == dc["warnings"]


def test_failure_exit_code(capsys, monkeypatch):
    import hermint.cli as cli
    monkeypatch.setattr(cli, "closed_H1", lambda n: 99)
    code, out, err = run(capsys, "verify", "--suite", "claim1", "--max-index", "3")
    assert code == 1 and "FAIL" in err
