import json
import subprocess
import sys

import pytest

from wreathlr.cli import run
from wreathlr.oracle.builtins import builtin_group, dump_group
from wreathlr.partitions import MultiPartition
from wreathlr.quiver import Quiver, build_quiver
from wreathlr.wreath_rules import Decomposition, induce_one_step


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lr_coefficient(capsys):
    assert call(capsys, "lr", "[2,1]", "[3,2]", "[4,3,1]") == (0, "2\n", "")


def test_lr_expansion_json(capsys):
    code, out, _ = call(capsys, "lr", "[2,1]", "[1]", "--json")
    assert code == 0
    data = json.loads(out)
    assert [t["partition"] for t in data["terms"]] == [[3, 1], [2, 2], [2, 1, 1]]
    assert {t["mult"] for t in data["terms"]} == {1}


def test_tableaux(capsys):
    code, out, _ = call(capsys, "tableaux", "[4,3,1]", "[2,1]", "[3,2]")
    assert code == 0
    assert out.splitlines() == [". . 1 1 / . 2 2 / 1", ". . 1 1 / . 1 2 / 2"]


def test_branch_json_round_trip(capsys):
    code, out, _ = call(capsys, "branch", "up", "[[2],[2,1],[1,1,1]]", "--dims", "1,2,1", "--json")
    assert code == 0
    got = Decomposition.from_json(json.loads(out))
    assert got == induce_one_step(MultiPartition([[2], [2, 1], [1, 1, 1]]), [1, 2, 1])
    assert sum(got.values()) == 10


def test_branch_down(capsys):
    code, out, _ = call(capsys, "branch", "down", "[[1],[1]]", "--dims", "1,1")
    assert code == 0
    assert out.splitlines() == ["1 × [[1],[]]", "1 × [[],[1]]"]


def test_wreath_lr(capsys):
    code, out, _ = call(capsys, "wreath-lr", "[[1],[]]", "[[1],[]]")
    assert code == 0
    assert out.splitlines() == ["1 × [[2],[]]", "1 × [[1,1],[]]"]


def test_quiver_json_round_trip(capsys):
    code, out, _ = call(capsys, "quiver", "--n", "2", "--l", "3", "--json", "--components")
    assert code == 0
    data = json.loads(out)
    assert data["components"] == 8
    assert Quiver.from_json(data) == build_quiver(2, 3)


def test_quiver_text_and_dot(capsys):
    code, out, _ = call(capsys, "quiver", "--n", "2", "--l", "3", "--components")
    assert code == 0
    assert "13 vertices, 5 arrows" in out
    assert "components: 8" in out
    code, out, _ = call(capsys, "quiver", "--n", "1", "--l", "2", "--dot")
    assert code == 0
    assert out.startswith("digraph quiver {")


@pytest.mark.parametrize(
    "argv",
    [
        ["lr", "[2,1", "[1]"],
        ["lr", "[1,2]", "[1]"],
        ["wreath-lr", "[[1]]", "[[1],[]]"],
        ["branch", "up", "[[1],[]]", "--dims", "1"],
        ["branch", "up", "[[1],[]]", "--dims", "2,1"],
        ["branch", "up", "[[1],[]]", "--dims", "x"],
        ["branch", "down", "[[],[]]", "--dims", "1,1"],
        ["tableaux", "[3]", "[1]", "[1]"],
        ["quiver", "--n", "-1", "--l", "2"],
        ["verify", "--group", "D4", "--mode", "lr"],
        ["verify", "--group", "C2", "--mode", "lr", "--k", "1"],
        ["verify", "--group", "S3", "--mode", "orthonormality", "--n", "5"],
        ["bogus"],
        [],
    ],
)
def test_invalid_input_exits_1(capsys, argv):
    code, out, err = call_exit(capsys, argv)
    assert code == 1
    assert "error" in err


def call_exit(capsys, argv):
    try:
        code = run(argv)
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_passes(capsys):
    code, out, _ = call(capsys, "verify", "--group", "C2", "--mode", "lr", "--k", "1", "--r", "1")
    assert code == 0
    assert out.splitlines()[-1] == "4/4 passed"


def test_verify_json(capsys):
    code, out, _ = call(capsys, "verify", "--group", "C2", "--mode", "quiver-arrows", "--n", "1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["failed"] == 0
    assert all(r["passed"] for r in data["reports"])


def test_verify_group_file(capsys, tmp_path):
    g, irreps = builtin_group("C3")
    path = tmp_path / "c3.json"
    path.write_text(json.dumps(dump_group(g, irreps)))
    code, out, _ = call(capsys, "verify", "--group-file", str(path), "--mode", "orthonormality", "--n", "2")
    assert code == 0
    assert "2/2 passed" in out


def test_verify_failure_exits_2(capsys, monkeypatch):
    # a deliberately wrong rule must be caught by the oracle
    import wreathlr.oracle.verify as V

    monkeypatch.setattr(V, "induce_one_step", lambda lam, dims: Decomposition())
    code, out, _ = call(capsys, "verify", "--group", "C2", "--mode", "branch", "--n", "1")
    assert code == 2
    assert "[FAIL]" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wreathlr", "lr", "[1]", "[1]", "[2]"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "1\n"


def test_help_documents_syntax(capsys):
    code, out, _ = call_exit(capsys, ["--help"])
    assert code == 0
    assert "[[2],[1,1],[]]" in out
