import json

import pytest

from conftest import cnf
from npsgames.cli import main
from npsgames.games import GLOBAL, CostInterdiction, InterdictionGame, SelectionGame, SimpleInterdiction
from npsgames.io import game_to_doc, instance_from_doc
from npsgames.reductions import parse_chain

ONE_CLAUSE_DOC = {"problem": "3sat-l", "payload": {"num_vars": 3, "clauses": [[-1, -2, 3]]}}


def put(tmp_path, name: str, doc) -> str:
    path = tmp_path / name
    path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(path)


def run_json(capsys, *argv: str) -> tuple[int, dict]:
    code = main([*argv, "--json"])
    return code, json.loads(capsys.readouterr().out)


# -- reduce / check-se -----------------------------------------------------------------


def test_reduce_roundtrip(tmp_path, capsys):
    src = put(tmp_path, "one_clause.json", ONE_CLAUSE_DOC)
    out = tmp_path / "reduced.json"
    code, report = run_json(capsys, "reduce", src, "--via", "3sat-l>vertex-cover", "-o", str(out))
    assert code == 0
    assert report["target_width"] == 9
    assert report["embedding"]["~l1"] == "v3"
    written = json.loads(out.read_text())
    again = instance_from_doc(written["target"])
    assert again.digest() == report["target_digest"]
    expected = parse_chain("3sat-l>vertex-cover").apply(instance_from_doc(ONE_CLAUSE_DOC)).target
    assert again.digest() == expected.digest()


def test_reduce_reads_dimacs(tmp_path, capsys):
    src = put(tmp_path, "f.cnf", "p cnf 2 1\n1 -2 0\n")
    code = main(["reduce", src, "--via", "sat-v>sat-l"])
    assert code == 0
    assert "sat-v>sat-l: 2 -> 4 elements" in capsys.readouterr().out


def test_check_se_pass_and_fail(tmp_path, capsys):
    code, report = run_json(capsys, "check-se", put(tmp_path, "a.json", ONE_CLAUSE_DOC), "--via", "3sat-l>vertex-cover")
    assert code == 0 and report["passed"]
    bad = {"problem": "clique-v", "payload": {"graph": {"n": 2, "directed": False, "edges": []}, "k": 0}}
    code, report = run_json(capsys, "check-se", put(tmp_path, "b.json", bad), "--via", "clique-v>clique-e")
    assert code == 1 and not report["passed"]
    assert report["extra_in_target"]


# -- solve ------------------------------------------------------------------------------


def test_solve_selection(tmp_path, capsys):
    g = SelectionGame(cnf("sat-v", 2, (1, 2), (-1, -2)), (0b01, 0b10))
    code, report = run_json(capsys, "solve", put(tmp_path, "g.json", game_to_doc(g)))
    assert code == 1 and report["first_player_wins"] is False


def test_solve_interdiction_variants(tmp_path, capsys):
    base = cnf("sat-v", 2, (1, 2))
    simple = game_to_doc(SimpleInterdiction(base, 0b11, 2))
    code, report = run_json(capsys, "solve", put(tmp_path, "s.json", simple))
    assert code == 0 and report["blocker"] == ["x1", "x2"]
    cost = game_to_doc(CostInterdiction(base, (1, 1), 1))
    assert main(["solve", put(tmp_path, "c.json", cost)]) == 1
    protect = game_to_doc(InterdictionGame(base, (0b11,), 0, 1, GLOBAL))
    assert main(["solve", put(tmp_path, "p.json", protect)]) == 1


def test_solve_with_strategy(tmp_path, capsys):
    g = SelectionGame(cnf("sat-v", 1, (1,)), (0b1,))
    code, report = run_json(capsys, "solve", put(tmp_path, "g.json", game_to_doc(g)), "--strategy")
    assert code == 0 and report["root_move"] == ["x1"]
    assert report["strategy"] is not None


# -- lift --------------------------------------------------------------------------------


def test_lift_via_chain_verifies(tmp_path, capsys):
    base = cnf("3sat-l", 2, (1, 2), (-1, 2))
    g = InterdictionGame(base, (base.mask_of(["l1", "l2"]),), 0, 1)
    code, report = run_json(capsys, "lift", put(tmp_path, "g.json", game_to_doc(g)), "--via", "3sat-l>vertex-cover", "--verify")
    assert code == 0
    ver = report["verification"]
    assert ver["passed"] and ver["illegal_lines"] == 0


def test_lift_gadget_then_reverify_pair(tmp_path, capsys):
    g = SelectionGame(cnf("sat-v", 3, (1, -2), (2, 3)), (1, 2, 4))
    src = put(tmp_path, "g.json", game_to_doc(g))
    pair_path = tmp_path / "pair.json"
    assert main(["lift", src, "--gadget", "interdiction", "-o", str(pair_path)]) == 0
    capsys.readouterr()
    pair = json.loads(pair_path.read_text())
    assert pair["provenance"] == "interdiction-gadget"
    assert pair["target"]["budget_protector"] == 1 and pair["target"]["budget_blocker"] == 2
    code, report = run_json(capsys, "lift", str(pair_path), "--verify")
    assert code == 0 and report["verification"]["passed"]


def test_corrupted_pair_is_rejected(tmp_path, capsys):
    g = SelectionGame(cnf("sat-v", 2, (1, 2), (-1, -2)), (0b01, 0b10))
    pair_path = tmp_path / "pair.json"
    assert main(["lift", put(tmp_path, "g.json", game_to_doc(g)), "--via", "sat-v>sat-l", "-o", str(pair_path)]) == 0
    pair = json.loads(pair_path.read_text())
    pair["target"]["base"]["payload"]["clauses"] += [[1], [-1]]
    pair_path.write_text(json.dumps(pair))
    capsys.readouterr()
    code, report = run_json(capsys, "lift", str(pair_path), "--verify")
    assert code != 0 and not report["verification"]["passed"]


def test_lift_needs_a_method(tmp_path):
    g = SelectionGame(cnf("sat-v", 1, (1,)), (0b1,))
    assert main(["lift", put(tmp_path, "g.json", game_to_doc(g))]) == 3


# -- catalog / suite ------------------------------------------------------------------


def test_catalog(capsys):
    code, report = run_json(capsys, "catalog")
    assert code == 0
    assert len(report["reductions"]) == 24
    assert "3sat-l>vertex-cover" in report["reductions"]
    assert {"literal", "dual", "complement"} <= set(report["transforms"])


def test_suite_subset(capsys):
    code, report = run_json(capsys, "suite", "--only", "2,3")
    assert code == 0 and [s["criterion"] for s in report["suites"]] == [2, 3]


# -- exit codes -------------------------------------------------------------------------------


def test_exit_unknown_edge(tmp_path):
    assert main(["reduce", put(tmp_path, "a.json", ONE_CLAUSE_DOC), "--via", "3sat-l>tsp"]) == 2


def test_exit_usage():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


@pytest.mark.parametrize("content", [None, "{not json", {"problem": "sat-v"}])
def test_exit_decode(tmp_path, content):
    path = str(tmp_path / "missing.json") if content is None else put(tmp_path, "bad.json", content)
    assert main(["check-se", path, "--via", "sat-v>sat-l"]) == 3


def test_exit_cap(tmp_path):
    assert main(["check-se", put(tmp_path, "a.json", ONE_CLAUSE_DOC), "--via", "3sat-l>vertex-cover", "--cap", "2"]) == 4


def test_exit_model_error(tmp_path):
    # the per-move gadget is only defined for an odd number of moves
    g = SelectionGame(cnf("sat-v", 2, (1, 2)), (1, 2))
    assert main(["lift", put(tmp_path, "g.json", game_to_doc(g)), "--gadget", "interdiction", "--local"]) == 5


def test_timing_goes_to_stderr(capsys):
    main(["catalog", "--json"])
    captured = capsys.readouterr()
    assert "s" in captured.err and "[catalog]" in captured.err
    assert "time" not in captured.out
