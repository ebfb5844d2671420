import json
import re
import subprocess
import sys
from fractions import Fraction

import pytest

from sdisc.cli import (
    EXIT_FAILED,
    EXIT_PARSE,
    EXIT_RANGE,
    certificate_from_json,
    certificate_to_json,
    main,
    matrix_from_json,
    matrix_to_json,
)
from sdisc.covariant import emit_certificate, verify_certificate
from sdisc.exactmath import RationalMatrix

FLOAT = re.compile(r"\d\.\d|\de[+-]?\d")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    assert not FLOAT.search(out.out), out.out
    return code, out.out, out.err


def write_matrix(tmp_path, name, grid, symmetric=True):
    path = tmp_path / name
    a = RationalMatrix(grid, symmetric=symmetric)
    path.write_text(json.dumps(matrix_to_json(a)))
    return str(path)


def test_compute_from_roots(capsys):
    assert run(capsys, "compute", "--roots", "1,2,3", "--k", "0")[:2] == (0, "4\n")
    assert run(capsys, "compute", "--roots", "5,5,5", "--k", "2")[:2] == (0, "3\n")
    assert run(capsys, "compute", "--roots", "1/2,3/4", "--k", "0")[:2] == (0, "1/16\n")


def test_compute_from_matrix(tmp_path, capsys):
    eye = write_matrix(tmp_path, "id4.json", RationalMatrix.identity(4).entries)
    assert run(capsys, "compute", "--matrix", eye, "--k", "1")[:2] == (0, "0\n")


def test_classify(tmp_path, capsys):
    path = write_matrix(tmp_path, "d.json", RationalMatrix.diag([1, 1, 2]).entries)
    assert run(capsys, "classify", "--matrix", path)[1] == "distinct=2; sdisc=[0, 2, 3]\n"
    path = write_matrix(tmp_path, "i.json", RationalMatrix.identity(3).entries)
    assert run(capsys, "classify", "--matrix", path)[1].startswith("distinct=1;")
    path = write_matrix(tmp_path, "e.json", RationalMatrix.diag([1, 2, 3]).entries)
    assert run(capsys, "classify", "--matrix", path)[1].startswith("distinct=3;")


def test_exit_codes(tmp_path, capsys):
    assert run(capsys, "compute", "--roots", "1,2,3", "--k", "3")[0] == EXIT_RANGE
    assert run(capsys, "compute", "--roots", "1,two", "--k", "0")[0] == EXIT_PARSE
    assert run(capsys, "compute", "--k", "0")[0] == EXIT_PARSE
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "entries": [[1.5, 0], [0, 1]]}')
    assert run(capsys, "classify", "--matrix", str(bad))[0] == EXIT_PARSE
    bad.write_text('{"n": 2, "entries": [["1", "2"], ["3", "1"]], "symmetric": true}')
    assert run(capsys, "classify", "--matrix", str(bad))[0] == EXIT_PARSE
    bad.write_text("not json")
    assert run(capsys, "classify", "--matrix", str(bad))[0] == EXIT_PARSE
    assert run(capsys, "classify", "--matrix", str(tmp_path / "missing.json"))[0] == EXIT_PARSE
    with pytest.raises(SystemExit) as info:
        main(["compute", "--k", "zero"])
    assert info.value.code == EXIT_PARSE
    assert run(capsys, "sos", "--n", "5", "--k", "0", "--out", str(tmp_path / "x.json"))[0] == EXIT_RANGE
    assert run(capsys, "bounds", "--n", "1")[0] == EXIT_RANGE


def test_matrix_round_trip():
    grid = [[Fraction(1, 3), Fraction(-2)], [Fraction(-2), Fraction(7, 5)]]
    a = RationalMatrix(grid, symmetric=True)
    data = json.loads(json.dumps(matrix_to_json(a)))
    assert data["entries"] == [["1/3", "-2"], ["-2", "7/5"]]
    b = matrix_from_json(data)
    assert b == a and b.symmetric


@pytest.mark.parametrize("n,k,terms,c", [(4, 1, 36, "1/4"), (2, 0, 2, "1/2")])
def test_sos_and_verify(tmp_path, capsys, n, k, terms, c):
    out = tmp_path / "cert.json"
    assert run(capsys, "sos", "--n", str(n), "--k", str(k), "--out", str(out))[0] == 0
    data = json.loads(out.read_text())
    assert data["c"] == c and len(data["terms"]) == terms
    assert data["metadata"]["variables"][:2] == ["a11", "a12"]
    assert "term_order" in data["metadata"] and "tool" in data["metadata"]
    assert all(isinstance(t["weight"], str) for t in data["terms"])
    assert run(capsys, "sos-verify", "--cert", str(out))[0] == 0
    assert run(capsys, "sos-verify", "--cert", str(out), "--symbolic")[0] == 0
    assert run(capsys, "sos-verify", "--cert", str(out), "--samples", "25")[0] == 0


def test_certificate_round_trip():
    cert = emit_certificate(3, 1)
    again = certificate_from_json(json.loads(json.dumps(certificate_to_json(cert))))
    assert again.c == cert.c and again.weights == cert.weights
    assert list(again.polys) == list(cert.polys)
    assert verify_certificate(again, "symbolic").ok


def test_tampered_certificate(tmp_path, capsys):
    data = certificate_to_json(emit_certificate(3, 0))
    data["terms"][0]["poly"][0]["coeff"] = "12345"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "sos-verify", "--cert", str(path), "--samples", "10")
    assert code == EXIT_FAILED
    assert "violating sample" in out
    assert run(capsys, "sos-verify", "--cert", str(path), "--symbolic")[0] == EXIT_FAILED
    data["terms"][0]["weight"] = 0.5
    path.write_text(json.dumps(data))
    assert run(capsys, "sos-verify", "--cert", str(path))[0] == EXIT_PARSE


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "4")
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()[1:]]
    assert rows[1] == ["1", "(3,1)", "no", "15", "120"]
    assert rows[2] == ["2", "(2,0)", "no", "9", "45"]
    out = run(capsys, "bounds", "--n", "3")[1]
    assert out.strip().splitlines()[2].split("\t")[-1] == "15"


@pytest.mark.parametrize("suite,max_n", [("gamma", 5), ("witness", 7), ("lemma", 4), ("covariant", 4)])
def test_verify_suites(capsys, suite, max_n):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--max-n", str(max_n))
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert len(lines) > 1


def test_verify_parallel_output_is_ordered(capsys):
    serial = run(capsys, "verify", "--suite", "witness", "--max-n", "5")[1]
    parallel = run(capsys, "verify", "--suite", "witness", "--max-n", "5", "--jobs", "2")[1]
    assert serial == parallel


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sdisc", "compute", "--roots", "1,2,3", "--k", "1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "6\n"
