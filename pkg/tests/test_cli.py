"""Command-line interface: every subcommand end to end."""

import json

import pytest

from metanov.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_normalize_wlc(capsys):
    code, out = run(capsys, "normalize", "--algebra", "wlc", "(x2*x1)*x3")
    assert code == 0
    assert out.strip() == "x1 L[x2] R[x3]"


def test_normalize_wnov(capsys):
    code, out = run(capsys, "normalize", "--algebra", "wnov", "x1*(x2*(x3*x4))")
    assert code == 0
    assert out.strip() == "-1 A(x1, x3*x2, x4)"


def test_normalize_json(capsys):
    code, out = run(capsys, "normalize", "--algebra", "wnov", "--json",
                    "((x1*x2)*x3)*x4")
    assert code == 0
    doc = json.loads(out)
    assert doc["algebra"] == "wnov"
    assert doc["normal_form"].startswith("2 A(x1, x2*x3, x4)")
    assert len(doc["terms"]) == 3


def test_normalize_modular(capsys):
    code, out = run(capsys, "normalize", "--algebra", "wnov",
                    "--field", "fp:7", "x1*(x2*(x3*x4))")
    assert code == 0
    assert out.strip() == "6 A(x1, x3*x2, x4)"


def test_dim(capsys):
    code, out = run(capsys, "dim", "--identities", "wnov2",
                    "--multidegree", "1,1,1")
    assert code == 0
    assert out.strip() == "9"


def test_dim_modular(capsys):
    code, out = run(capsys, "dim", "--identities", "wlc2",
                    "--multidegree", "1,1,1,1", "--field", "fp:1009")
    assert code == 0
    assert out.strip() == "72"


def test_dim_from_identity_file(capsys, tmp_path):
    p = tmp_path / "ids.txt"
    p.write_text("v1*v2 - v2*v1 = 0\n")
    code, out = run(capsys, "dim", "--identities", str(p),
                    "--multidegree", "1,1")
    assert code == 0
    assert out.strip() == "1"


def test_basis(capsys):
    code, out = run(capsys, "basis", "--identities", "wnov2",
                    "--multidegree", "1,1")
    assert code == 0
    assert out.splitlines() == ["(x1*x2)", "(x2*x1)"]


def test_check_identity_holds(capsys):
    code, out = run(capsys, "check-identity", "--algebra", "wnov",
                    "--identity", "A(v1,v2,v3) - A(v1,v3,v2) = 0",
                    "--max-degree", "5")
    assert code == 0
    assert out.startswith("holds")


def test_check_identity_counterexample(capsys):
    code, out = run(capsys, "check-identity", "--algebra", "wlc",
                    "--identity", "v1*(v2*v3) - v2*(v1*v3)",
                    "--max-degree", "4")
    assert code == 1
    assert "counterexample" in out


def test_membership(capsys):
    code, out = run(capsys, "membership", "--identities", "wnov2",
                    "(x1*x2)*(x3*x4)")
    assert code == 0 and out.strip() == "true"
    code, out = run(capsys, "membership", "--identities", "wnov2",
                    "((x1*x2)*x3)*x4")
    assert code == 0 and out.strip() == "false"


def test_classify(capsys):
    code, out = run(capsys, "classify", "x1*x2 + 2 x2*x1")
    assert code == 0
    assert "nilpotent_bound" in out and "bound: 5" in out
    code, out = run(capsys, "classify", "x1*(x2*x3)")
    assert code == 0
    assert "non_nilpotent_candidate" in out


def test_verify_suite_exit_codes(capsys):
    code, out = run(capsys, "verify", "--suite", "oracle")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("[")]
    assert lines and all(l.startswith("[PASS]") for l in lines)
