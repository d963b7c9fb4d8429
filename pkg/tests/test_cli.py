import json
import subprocess
import sys
from importlib import resources

import pytest

from grobalg import load_fixture
from grobalg.cli import InputError, main, run


def fixture_path(name):
    return str(resources.files("grobalg.data").joinpath(f"{name}.scheme"))


def cli(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_ideal_example51(capsys):
    status, out, _ = cli(capsys, "ideal", fixture_path("example51"))
    lines = out.splitlines()
    assert status == 0 and len(lines) == 3 and lines[-1] == "variables: 7"
    assert all(line.startswith("y[") for line in lines[:2])


def test_ideal_rename(capsys):
    _, out, _ = cli(capsys, "ideal", fixture_path("example51"), "--rename", "X1,X2,X3,X4,X5,X6,X7")
    assert out.splitlines()[:2] == ["-X1*X5 + X2*X7", "X3*X7 - X4*X6"]


def test_check_commutative(capsys):
    status, out, _ = cli(capsys, "check", fixture_path("example54"),
                         "--set", "z.y->y.z=1", "--set", "z.x->x.z=1", "--set", "y.x->x.y=1")
    assert status == 0 and out == "GROEBNER: yes\n"


def test_check_failure(capsys):
    status, out, _ = cli(capsys, "check", fixture_path("example54"),
                         "--set", "z.y->y.y=1", "--set", "y.x->x.x=1")
    assert status == 1
    assert out.startswith("GROEBNER: no\ncertificate: overlap z.y / y.x reduces to")


def test_gldim(capsys):
    status, out, _ = cli(capsys, "gldim", fixture_path("example51"))
    assert (status, out) == (0, "3\n")


def test_specialize(capsys):
    status, out, _ = cli(capsys, "specialize", fixture_path("example61"), "--rename", "A,B,C")
    assert status == 0
    assert out.splitlines() == ["B*C", "B*C^2 - A*C", "variables: 3"]


def test_basis_and_cartan(capsys):
    status, out, _ = cli(capsys, "basis", fixture_path("example53"))
    assert status == 0 and out.splitlines()[-1] == "dimension: 4"
    status, out, _ = cli(capsys, "cartan", fixture_path("example53"))
    assert out.splitlines() == ["4", "determinant: 4"]
    status, out, _ = cli(capsys, "cartan", fixture_path("example52"))
    assert status == 1


def test_betti(capsys):
    status, out, _ = cli(capsys, "betti", fixture_path("example52"), "--max-length", "3")
    assert (status, out) == (0, "o o: 1 2 1 0\n")


def test_op(capsys):
    status, out, _ = cli(capsys, "op", fixture_path("example52"))
    assert status == 0
    assert "tips: x^op.y^op" in out.splitlines()


def test_tensor(capsys):
    status, out, _ = cli(capsys, "tensor", fixture_path("example53"), "--with", fixture_path("example53"))
    assert status == 0
    assert "groebner: yes" in out and "reduced: yes" in out and "dimension: 16" in out
    status, out, _ = cli(capsys, "tensor", fixture_path("example52"), "--envelope", "--set", "y.x->x.y=1")
    assert status == 0 and "commutativity: 4" in out


def test_json_schema(capsys):
    status, out, _ = cli(capsys, "ideal", fixture_path("example51"), "--json")
    doc = json.loads(out)
    assert list(doc) == ["scheme", "variables", "generators"]
    assert len(doc["variables"]) == 7
    assert [list(g) for g in doc["generators"]] == [["t", "t2", "nhat", "poly"]] * 2
    assert all(line == line.rstrip() for line in out.splitlines())
    _, out, _ = cli(capsys, "gldim", fixture_path("example51"), "--json")
    assert json.loads(out)["invariants"]["gldim"] == "3"


@pytest.mark.parametrize("argv", [
    ["ideal", "/nonexistent.scheme"],
    ["bogus", "x"],
    ["check", "EX54", "--set", "q.y->y.z=1"],
    ["check", "EX54", "--set", "z.y->z.y=1"],
    ["check", "EX54", "--set", "z.y->y.z=1/0"],
    ["ideal", "EX51", "--rename", "A,B"],
    ["tensor", "EX52"],
    ["ideal", "EX51", "--jobs", "0"],
])
def test_input_errors(capsys, argv):
    argv = [fixture_path("example54") if a == "EX54" else fixture_path("example51") if a == "EX51"
            else fixture_path("example52") if a == "EX52" else a for a in argv]
    status, out, err = cli(capsys, *argv)
    assert status == 2 and out == ""


def test_parse_error_location(tmp_path, capsys):
    f = tmp_path / "bad.scheme"
    f.write_text("vertices: 1 2\narrow a: 1 -> 2\narrow c: 1 -> 2\ntips: a.c\n", encoding="utf-8")
    status, _, err = cli(capsys, "ideal", str(f))
    assert status == 2 and "line 4, column 7: non-composable path" in err


def test_run_api():
    status, text = run("ideal", load_fixture("example52"))
    assert (status, text) == (0, "variables: 2")
    with pytest.raises(InputError):
        run("nope", load_fixture("example52"))


def test_deterministic_across_jobs():
    sf = load_fixture("example54")
    outs = {run("ideal", sf, jobs=j)[1] for j in (1, 8) for _ in range(3)}
    assert len(outs) == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "grobalg", "gldim", fixture_path("example51")],
                         capture_output=True, text=True, check=False)
    assert (res.returncode, res.stdout) == (0, "3\n")
