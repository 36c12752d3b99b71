import json

import pytest

from gemfree.cli import main
from gemfree.graph_io import serialize
from gemfree.generators import groetzsch_graph
from gemfree.patterns import NAMED_PATTERNS, cycle_graph


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in [
        ("groetzsch", groetzsch_graph()),
        ("gem", NAMED_PATTERNS["gem"]),
        ("c5", cycle_graph(5)),
    ]:
        p = tmp_path / f"{name}.col"
        p.write_text(serialize(g, "dimacs"))
        paths[name] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_check_member(files, capsys):
    code, out = run(capsys, "check", files["groetzsch"], "--class", "p3up2,gem")
    rep = json.loads(out)
    assert code == 0 and rep["member"] is True
    assert "input_sha256" in rep and rep["version"]


def test_check_non_member_witness(files, capsys):
    code, out = run(capsys, "check", files["gem"])
    rep = json.loads(out)
    assert code == 1
    assert rep["witness"]["pattern"] == "gem"
    assert len(rep["witness"]["embedding"]) == 5


def test_check_missing_file(capsys):
    code = main(["check", "/nonexistent/missing.col"])
    assert code == 2


def test_color_two_omega(files, capsys):
    code, out = run(capsys, "color", files["groetzsch"], "--algorithm", "two-omega")
    rep = json.loads(out)
    assert code == 0 and rep["verified"] is True
    assert rep["num_colors"] == 4 and rep["bound"] == 4
    assert rep["trace"]["case"] == "omega<=2"


def test_color_exact_c5(files, capsys):
    code, out = run(capsys, "color", files["c5"], "--algorithm", "exact")
    rep = json.loads(out)
    assert code == 0 and rep["num_colors"] == 3


def test_color_rejects_non_member(files, capsys):
    code, out = run(capsys, "color", files["gem"], "--algorithm", "two-omega")
    rep = json.loads(out)
    assert code == 1 and rep["error"] == "class-violation"


def test_chi_guardrail_flag(files, capsys):
    code, out = run(capsys, "chi", files["c5"], "--max-n", "3")
    assert code == 2


def test_partition_command(files, capsys):
    code, out = run(capsys, "partition", files["groetzsch"])
    rep = json.loads(out)
    assert code == 0
    assert rep["omega"] == 2
    assert rep["checks"]["fact1"]["passed"] is True


def test_gen_named_to_file(tmp_path, capsys):
    out_path = tmp_path / "g.col"
    code = main(["gen", "schlafli-complement", "--format", "dimacs", "--out", str(out_path)])
    assert code == 0
    assert "p edge 27 135" in out_path.read_text()


def test_gen_expansion_with_bag_map(tmp_path, capsys):
    out_path = tmp_path / "exp.json"
    code = main(["gen", "expansion", "--base", "c5", "--sizes", "2,2,2,2,2",
                 "--out", str(out_path)])
    assert code == 0
    meta = json.loads((tmp_path / "exp.json.meta.json").read_text())
    assert meta["bags"][0] == [0, 1]
    g = json.loads(out_path.read_text())
    assert g["n"] == 10


def test_gen_random_deterministic(capsys):
    code1, out1 = run(capsys, "gen", "random", "--n", "8", "--seed", "5")
    code2, out2 = run(capsys, "gen", "random", "--n", "8", "--seed", "5")
    assert code1 == code2 == 0 and out1 == out2


def test_suite_size_budget_zero(capsys):
    code, out = run(capsys, "suite", "--size-budget", "0")
    rep = json.loads(out)
    assert code == 0
    skipped = {c["id"] for c in rep["criteria"] if c["skipped"]}
    assert skipped == {4, 5, 7, 8}
    fixed = {c["id"] for c in rep["criteria"] if not c["skipped"]}
    assert {1, 2, 3, 6} <= fixed
