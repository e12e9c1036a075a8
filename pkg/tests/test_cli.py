import csv
import io
import json
import subprocess
import sys

import pytest

from qdivpow.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "x1*x1")
    assert code == EXIT_OK
    assert out.splitlines() == ["q = generic (char(q) = 0), divided, n = 2", "(q + q^-1)*x(2,0)"]


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "q^3", "--q", "root:3", "--json")
    d = json.loads(out)
    assert code == EXIT_OK and d["value"] == "1" and d["type"] == "scalar" and d["char_q"] == 3


def test_apply(capsys):
    code, out, _ = run(capsys, "apply", "e1", "x(1,2)")
    assert code == EXIT_OK and out.splitlines()[-1] == "(q + q^-1)*x(2,1)"
    code, out, _ = run(capsys, "apply", "d1; s1", "x(2,0)")
    assert out.splitlines()[-1] == "q*x(1,0)"
    code, out, _ = run(capsys, "apply", "s1; d1", "x(2,0)")
    assert out.splitlines()[-1] == "q^2*x(1,0)"


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "x(1,0); d1")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[1] == "s1^-1 + q*(d1; x(1,0))"
    assert lines[2].endswith("s1^-1 + q x(1,0) d1")


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "lattice", "--deg", "3")[0] == EXIT_OK
    code, out, _ = run(capsys, "verify", "qarith", "--q", "root:6", "--json")
    d = json.loads(out)
    assert code == EXIT_FAIL and d["ok"] is False
    assert run(capsys, "verify", "hopf", "--presentation", "dq-", "--deg", "3")[0] == EXIT_OK


def test_usage_errors(capsys):
    assert run(capsys, "verify", "nope")[0] == EXIT_USAGE
    assert run(capsys, "eval", "q", "--q", "root:2")[0] == EXIT_USAGE
    assert run(capsys, "eval", "q", "--q", "banana")[0] == EXIT_USAGE
    assert run(capsys, "verify", "uq", "--presentation", "dq+")[0] == EXIT_USAGE
    assert run(capsys, "decompose", "--l", "4", "--q", "root:5")[0] == EXIT_USAGE
    assert run(capsys)[0] == EXIT_USAGE


def test_parse_error_caret(capsys):
    code, _, err = run(capsys, "eval", "x(1,")
    assert code == EXIT_USAGE
    lines = err.splitlines()
    assert lines[0] == "error: expected an integer, found end of input at column 5"
    assert lines[1] == "  x(1,"
    assert lines[2] == "      ^"


def test_decompose_text(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "3", "--kind", "exterior")
    assert code == EXIT_OK
    assert "weight 0 (gl: lambda_3)" in out
    assert out.splitlines()[-1] == "total dimension 8"


def test_decompose_csv(capsys):
    code, out, _ = run(capsys, "decompose", "--l", "3", "--csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK
    assert [int(r["component_dimension"]) for r in rows] == [1, 2, 3, 2, 1]
    assert [r["weight"] for r in rows] == ["0", "lambda_1", "2*lambda_1", "lambda_1", "0"]


def test_decompose_json(capsys):
    code, out, _ = run(capsys, "decompose", "--q", "root:3", "--kind", "divided", "--max-s", "3", "--json")
    d = json.loads(out)
    assert code == EXIT_OK
    assert [c["completely_reducible"] for c in d["components"]] == [True, True, True, False]


def test_info(capsys):
    code, out, _ = run(capsys, "info", "--q", "root:5", "--kind", "restricted:5", "--json")
    d = json.loads(out)
    assert d["dimension"] == 25 and d["cyclotomic_polynomial"] == [1, 1, 1, 1, 1]
    assert d["q_to_the_l_is_one"] is True


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "qdivpow", "eval", "q + q^-1"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.splitlines()[-1] == "q + q^-1"
