import json

import pytest

from monideal.cli import EXIT_CAP, EXIT_CLAIM, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def tmp_ideal(tmp_path):
    def make(text, name="i.ideal"):
        p = tmp_path / name
        p.write_text(text)
        return p
    return make


def test_power(capsys, data_dir):
    code, out, _ = run(capsys, "power", data_dir / "xy_squares.ideal", "-k", 2)
    assert code == EXIT_OK
    assert out == "vars: x y\nx^4\nx^2*y^2\ny^4\n"


def test_colon_intersect_radical_closure(capsys, tmp_ideal, data_dir):
    a = data_dir / "xy_squares.ideal"
    b = tmp_ideal("vars: x y\nx", "b.ideal")
    assert run(capsys, "colon", a, b)[1] == "vars: x y\nx\ny^2\n"
    assert run(capsys, "intersect", a, b)[1] == "vars: x y\nx^2\nx*y^2\n"
    assert run(capsys, "radical", a)[1] == "vars: x y\nx\ny\n"
    assert run(capsys, "closure", a)[1] == "vars: x y\nx^2\nx*y\ny^2\n"


def test_ass_and_irrdec(capsys, data_dir):
    code, out, _ = run(capsys, "ass", data_dir / "seven_variable.ideal", "-k", 2)
    assert code == EXIT_OK and "(x1, x2, x3, x4, x5, x6, x7)" in out
    code, out2, _ = run(capsys, "ass", data_dir / "seven_variable.ideal", "-k", 2, "--method", "decomp")
    assert out2.splitlines()[1:] == out.splitlines()[1:]
    code, out, _ = run(capsys, "irrdec", data_dir / "xy_squares.ideal")
    assert code == EXIT_OK and out.strip() == "(x^2, y^2)"


def test_depth(capsys, data_dir):
    f = data_dir / "seven_variable.ideal"
    code, out, _ = run(capsys, "depth", f, "-k", 2)
    assert code == EXIT_OK and "= 0" in out
    code, out, _ = run(capsys, "depth", f, "-k", 3)
    assert ">= 1" in out
    code, out, _ = run(capsys, "depth", data_dir / "xy_squares.ideal", "--exact")
    assert out.strip() == "depth R/I^1 = 0"


def test_persist_reports_violation_at_two(capsys, data_dir):
    code, out, _ = run(capsys, "persist", data_dir / "seven_variable.ideal", "--kmax", 3)
    assert code == EXIT_OK
    assert "persistence violations: [2]" in out
    code, _, err = run(capsys, "persist", data_dir / "seven_variable.ideal", "--kmax", 2, "--expect-persistent")
    assert code == EXIT_CLAIM and "claim failed" in err


def test_counterexample_command(capsys):
    code, out, _ = run(capsys, "paper-example")
    assert code == EXIT_OK
    clauses = [ln for ln in out.splitlines() if ln.startswith("(")]
    assert len(clauses) == 6 and all(" PASS " in ln for ln in clauses)


def test_graph_commands(capsys, data_dir):
    code, out, _ = run(capsys, "graph", "fhv", data_dir / "triangle.graph")
    assert code == EXIT_OK and out.strip() == "decomposition = J^2: PASS"
    code, out, _ = run(capsys, "graph", "p1", data_dir / "c5.graph")
    assert code == EXIT_OK and out.count("PASS") == 2
    code, out, _ = run(capsys, "graph", "cover", data_dir / "triangle.graph")
    assert out == "vars: x1 x2 x3\nx1*x2\nx1*x3\nx2*x3\n"


def test_degree2_command(capsys):
    code, out, _ = run(capsys, "--seed", 3, "degree2", "--trials", 10, "--nmax", 4, "--kmax", 2)
    assert code == EXIT_OK and "PASS" in out


def test_json_is_byte_stable(capsys, data_dir):
    argv = ["persist", data_dir / "seven_variable.ideal", "--kmax", 2, "--json", "--threads", 2]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    doc = json.loads(first)
    assert doc["schema"] == "monideal.report/1" and doc["command"] == "persist"
    assert first == json.dumps(doc, sort_keys=True, indent=2) + "\n"


def test_json_flag_position_is_free(capsys, data_dir):
    f = data_dir / "xy_squares.ideal"
    assert run(capsys, "--json", "radical", f)[1] == run(capsys, "radical", f, "--json")[1]


def test_usage_errors(capsys, tmp_ideal, data_dir):
    assert run(capsys, "power", data_dir / "xy_squares.ideal")[0] == EXIT_USAGE  # missing -k
    assert run(capsys, "nonsense")[0] == EXIT_USAGE
    assert run(capsys, "radical", tmp_ideal("vars: x\ny"))[0] == EXIT_USAGE
    assert run(capsys, "radical", "/no/such/file")[0] == EXIT_USAGE
    assert run(capsys, "--threads", 0, "radical", data_dir / "xy_squares.ideal")[0] == EXIT_USAGE
    bad_graph = tmp_ideal("3\n1 1\n", "bad.graph")
    assert run(capsys, "graph", "fhv", bad_graph)[0] == EXIT_USAGE
    other = tmp_ideal("vars: a b\na", "other.ideal")
    assert run(capsys, "colon", data_dir / "xy_squares.ideal", other)[0] == EXIT_USAGE


def test_empty_ideal_warns_on_stderr(capsys, tmp_ideal):
    code, out, err = run(capsys, "radical", tmp_ideal("vars: x y\n"))
    assert code == EXIT_OK and "warning:" in err and out == "vars: x y\n"


def test_cap_exceeded(capsys, data_dir):
    code, _, err = run(capsys, "depth", data_dir / "seven_variable.ideal", "-k", 2, "--exact", "--cap", 100)
    assert code == EXIT_CAP and "cap" in err
