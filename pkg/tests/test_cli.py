import json
import subprocess
import sys

import pytest

from genkostka import cli, sweeps


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_kostka_all_methods_agree(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "K", "--lambda", "2,1",
                       "--mu", '[{"w":1,"h":1}]x3', "--n", "3", "--method", "all")
    assert code == 0
    assert out.splitlines() == ["paths: q + q^2", "charge: q + q^2", "fermionic: q + q^2",
                                "all methods agree"]


def test_supernomial_example(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "S", "--lambda", "1,1",
                       "--mu", '[{"w":1,"h":1},{"w":1,"h":1}]', "--n", "2")
    assert (code, out) == (0, "1 + q\n")


def test_empty_content(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "K", "--lambda", "0", "--mu", "[]")
    assert (code, out) == (0, "1\n")


def test_json_output(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "Ktilde", "--lambda", "2,1",
                       "--mu", "(1),(1),(1)", "--json")
    d = json.loads(out)
    assert code == 0 and d["results"] == {"paths": "q + q^2"} and d["agree"]


def test_fermionic_only_for_F(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "F", "--lambda", "2,1",
                       "--mu", "(1),(1),(1)", "--n", "3", "--method", "all")
    assert (code, out) == (0, "q + q^2\n")


def test_methods_disagree_on_the_dropped_column_content(capsys):
    # see the dropped-column tableau test in test_lrtab
    code, out, _ = run(capsys, "compute", "--kind", "K", "--lambda", "3,3",
                       "--mu", "(1),(1),(1),(1),(1x2)", "--method", "all")
    assert code == 1
    assert "paths: q^6 + q^8" in out
    assert "charge: q^5 + q^8" in out
    assert "MISMATCH between methods" in out


@pytest.mark.parametrize("argv", [
    ["compute", "--kind", "K", "--lambda", "2,x", "--mu", "(1)"],
    ["compute", "--kind", "K", "--lambda", "1,2", "--mu", "(1),(1),(1)"],
    ["compute", "--kind", "S", "--lambda", "1", "--mu", "(1)", "--method", "fermionic"],
    ["compute", "--kind", "K", "--lambda", "1", "--mu", "(2,1)"],
    ["verify", "--suite", "hco", "--mu", "(1)"],
    ["verify", "--suite", "hco", "--max-boxes", "0"],
    ["graph", "--mu", "(3),(3),(3)", "--max-boxes", "4"],
])
def test_user_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_defect_exits_3(capsys, monkeypatch):
    monkeypatch.setenv("KOSTKA_MAX_ORBIT", "1")
    from genkostka import paths
    paths.clear_caches()
    code, _, err = run(capsys, "compute", "--kind", "S", "--lambda", "1,1,1", "--mu", "(1),(1x2)")
    paths.clear_caches()
    assert code == 3
    assert "witness" in json.loads(err)


def test_output_is_deterministic(capsys):
    argv = ["compute", "--kind", "K", "--lambda", "2,2", "--mu", "(2),(1x2)", "--method", "all"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_graph_dot(capsys, tmp_path):
    code, out, _ = run(capsys, "graph", "--mu", "(2),(2),(1x2)")
    assert code == 0
    assert out.startswith("digraph cyclage {") and out.count("->") == 12
    target = tmp_path / "g.dot"
    assert run(capsys, "graph", "--mu", "(2),(2),(1x2)", "--out", str(target))[0] == 0
    assert target.read_text() == out
    code, out, _ = run(capsys, "graph", "--mu", "(2x3)")
    assert out.count("->") == 0 and out.count("label=") == 1


def test_verify_poset_fixture(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--suite", "poset", "--mu", "(2),(2),(1x2)",
                       "--out", str(target))
    assert code == 0
    assert out.startswith("poset: pass")
    report = json.loads(target.read_text())
    assert report["ok"] and report["failures"] == []


def test_verify_experimental_suite_exits_0(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "anrr", "--max-boxes", "3")
    assert code == 0
    assert out.startswith("anrr:")


def test_verify_small_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "duality", "--max-boxes", "3")
    assert code == 0 and out.startswith("duality: pass")
    assert set(sweeps.SUITES) >= {"hco", "poset", "anrr"}


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "genkostka", "compute", "--kind", "K",
                          "--lambda", "2,1", "--mu", "(1),(1),(1)"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout == "q + q^2\n"
