"""End-to-end command-line tests driven through main(argv)."""

import json

import pytest

from sl2chars.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_eps4(capsys):
    code, out, _ = run(capsys, "eval", "eps4", "--mod", "4", "--matrix", "1,1,0,1")
    assert code == 0
    assert out.strip() == "1/4 (i)"


def test_eval_eps3(capsys):
    code, out, _ = run(capsys, "eval", "eps3", "--mod", "3", "--matrix", "1,1,0,1")
    assert code == 0
    assert out.strip() == "1/3"


def test_eval_eps2_negative(capsys):
    code, out, _ = run(capsys, "eval", "eps2", "--mod", "2", "--matrix", "0,1,1,0")
    assert code == 0
    assert out.strip() == "1/2 (-1)"


def test_eval_dual(capsys):
    code, out, _ = run(capsys, "eval", "eps4p", "--dual", "--matrix", "1,a,0,1")
    assert code == 0
    assert out.strip() == "1/2 (-1)"
    code, out, _ = run(capsys, "eval", "eps4p", "--dual", "--matrix", "1,0,0,1")
    assert code == 0
    assert out.strip() == "0/1 (1)"


def test_eval_identity_is_trivial(capsys):
    code, out, _ = run(capsys, "eval", "eps3", "--mod", "3", "--matrix", "1,0,0,1")
    assert code == 0
    assert out.strip() == "0/1 (1)"


def test_eval_dual_scalar(capsys):
    code, out, _ = run(capsys, "eval", "eps4p", "--dual",
                       "--matrix", "1+a,0,0,1+a")
    assert code == 0
    assert out.strip() == "1/2 (-1)"


def test_eval_reduction_through_larger_modulus(capsys):
    code, out, _ = run(capsys, "eval", "eps4", "--mod", "12", "--matrix", "1,1,0,1")
    assert code == 0
    assert out.strip() == "1/4 (i)"


def test_eval_rejects_nonunimodular(capsys):
    code, out, err = run(capsys, "eval", "eps2", "--mod", "2", "--matrix", "1,1,1,1")
    assert code == 1
    assert "determinant" in err


def test_eval_usage_errors(capsys):
    code, _, err = run(capsys, "eval", "eps2", "--matrix", "1,0,0,1")
    assert code == 2
    code, _, err = run(capsys, "eval", "eps2", "--mod", "2", "--matrix", "1,0,0")
    assert code == 2
    code, _, err = run(capsys, "eval", "eps4p", "--dual", "--matrix", "1,b,0,1")
    assert code == 2


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "formulas")
    assert code == 0
    assert "FAIL" not in out
    assert out.strip().splitlines()[-1].endswith("checks passed")


def test_verify_oracle_restricted(capsys):
    code, out, _ = run(capsys, "verify", "oracle-equivalence", "--n", "3")
    assert code == 0
    assert "N=3" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "lemmas", "--json")
    assert code == 0
    results = json.loads(out)
    assert all(r["passed"] for r in results)


def test_field_inline(capsys):
    code, out, _ = run(capsys, "field", "--coeffs=-2,0,1", "--json")
    assert code == 0
    rec = json.loads(out)[0]
    assert rec["poly"] == "x^2 - 2"
    assert rec["order"] == 4
    assert rec["structure"] == [2, 2]
    assert rec["status"] == "computed"


def test_field_file(tmp_path, capsys):
    path = tmp_path / "fields.txt"
    path.write_text("# header comment\n1,-1,1\n-18,-1,1  # split everywhere\n")
    code, out, _ = run(capsys, "field", "--file", str(path), "--json")
    assert code == 0
    recs = json.loads(out)
    assert [r["order"] for r in recs] == [3, 144]


def test_field_missing_file(capsys):
    code, _, err = run(capsys, "field", "--file", "/no/such/file")
    assert code == 2


def test_field_degree_too_small(capsys):
    code, _, err = run(capsys, "field", "--coeffs", "0,1")
    assert code == 1
    assert "degree" in err


def test_field_reducible(capsys):
    code, out, _ = run(capsys, "field", "--coeffs=-1,0,1", "--json")
    assert code == 1
    assert json.loads(out)[0]["status"] == "error"


def test_reproduce_tables(capsys):
    code, out, _ = run(capsys, "reproduce", "1")
    assert code == 0
    assert out.strip().splitlines()[-1] == "18/18 match"
    code, out, _ = run(capsys, "reproduce", "2")
    assert code == 0
    assert out.strip().splitlines()[-1] == "4/5 match, 1 flagged-unknown"
    code, out, _ = run(capsys, "reproduce", "3")
    assert code == 0
    assert out.strip().splitlines()[-1] == "2/2 match"


def test_reproduce_json(capsys):
    code, out, _ = run(capsys, "reproduce", "2", "--json")
    assert code == 0
    recs = json.loads(out)
    assert [r["status"] for r in recs] == [
        "flagged-unknown", "match", "match", "match", "match"]
    assert [r["order"] for r in recs] == [144, 144, 1728, 1728, 20736]


def test_split(capsys):
    code, out, _ = run(capsys, "split", "--coeffs=-2,0,1", "--prime", "2",
                       "--json")
    assert code == 0
    rec = json.loads(out)
    assert rec["parts"] == [[2, 1]]


def test_split_reducible(capsys):
    code, _, err = run(capsys, "split", "--coeffs=-1,0,1", "--prime", "2")
    assert code == 1


def test_deterministic_output(capsys):
    runs = []
    for _ in range(2):
        code, out, _ = run(capsys, "reproduce", "2", "--tsv")
        assert code == 0
        runs.append(out)
    assert runs[0] == runs[1]


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
