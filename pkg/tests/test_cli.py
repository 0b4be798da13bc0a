import json
import subprocess
import sys

import pytest

from edgebalance.cli import main
from edgebalance.graph import complete_graph, crown_graph, path_graph, to_edge_list
from edgebalance.graphspec import GraphSpecError, parse_graph_spec
from edgebalance.labeling import EdgeLabeling, to_labeling_text
from edgebalance.products import cartesian_product, direct_product


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_graphspec_forms(tmp_path):
    assert parse_graph_spec("complete:4") == complete_graph(4)
    assert parse_graph_spec("bipartite:2,3").q == 6
    assert parse_graph_spec("crown:5") == crown_graph(5)
    assert parse_graph_spec("product:direct:complete:2:complete:5") == crown_graph(5)
    nested = parse_graph_spec("product:cartesian:product:direct:complete:2:complete:3:path:3")
    assert nested == cartesian_product(direct_product(complete_graph(2), complete_graph(3)), path_graph(3))
    f = tmp_path / "g.txt"
    f.write_text(to_edge_list(path_graph(4)))
    assert parse_graph_spec(f"file:{f}") == path_graph(4)
    assert parse_graph_spec(f"product:lex:file:{f}:complete:1") == path_graph(4)


@pytest.mark.parametrize("bad,token", [("complet:3", "complet"), ("crown:x", "'x'"), ("product:strong:crown:3:crown:3", "strong"),
                                       ("crown:3:extra", "extra"), ("bipartite:3", "'3'"), ("crown:1", "crown:1")])
def test_graphspec_errors_name_token(bad, token):
    with pytest.raises(GraphSpecError) as info:
        parse_graph_spec(bad)
    assert token in str(info.value)


def test_cmd_ebi_crown4(capsys):
    code, out, _ = run(capsys, "ebi", "crown:4")
    doc = json.loads(out)
    assert code == 0 and doc["index_set"] == [0, 2, 4] and doc["complete"]


def test_cmd_ebi_crown3_and_k3(capsys):
    assert json.loads(run(capsys, "ebi", "crown:3")[1])["index_set"] == [0]
    assert json.loads(run(capsys, "ebi", "complete:3")[1])["index_set"] == [1]


def test_cmd_ebi_budget_exit(capsys):
    code, out, err = run(capsys, "ebi", "crown:5", "--budget", "100")
    assert code == 3 and not json.loads(out)["complete"] and "budget" in err


def test_cmd_ebi_usage_error(capsys):
    code, _, err = run(capsys, "ebi", "nonsense:3")
    assert code == 2 and "nonsense" in err
    with pytest.raises(SystemExit) as info:
        main(["ebi"])
    assert info.value.code == 2


def test_cmd_construct_examples(capsys):
    doc = json.loads(run(capsys, "construct", "8", "--k", "12")[1])
    assert doc["index"] == 12 == doc["counts"]["index"] and doc["n"] == 8
    assert len(doc["labels"]) == 56 and doc["labels"].count("1") == 28
    assert json.loads(run(capsys, "construct", "7", "--k", "6")[1])["index"] == 6
    doc = json.loads(run(capsys, "construct", "5", "--k", "1")[1])
    five_crown_index1 = EdgeLabeling.from_one_edges(crown_graph(5), [(0, 6), (0, 7), (0, 8), (0, 9), (1, 5), (1, 7),
                                                         (1, 8), (1, 9), (2, 5), (3, 5)])
    assert doc["labels"] == five_crown_index1.bits


def test_cmd_construct_all_and_bad_k(capsys):
    docs = json.loads(run(capsys, "construct", "6")[1])
    assert [d["index"] for d in docs] == [0, 2, 4, 6, 8]
    code, _, err = run(capsys, "construct", "6", "--k", "3")
    assert code == 2 and "not in EBI" in err


def test_cmd_construct_dot_shows_only_one_edges(capsys):
    code, out, _ = run(capsys, "construct", "4", "--k", "4", "--format", "dot")
    assert code == 0 and out.startswith("graph crown4_index4 {")
    assert out.count("[style=solid]") == 6 and out.count("[style=invis]") == 6


def test_cmd_verify_scopes(capsys):
    code, out, _ = run(capsys, "verify", "crown-range", "4..12")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and len(doc["checks"]) == 9
    code, out, _ = run(capsys, "verify", "prop2", "--trials", "20", "--max-p", "6")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "verify", "lemma5", "--graph", "crown:4", "--samples", "200")
    assert code == 0 and json.loads(out)["checks"][0]["detail"]["failures"] == []
    code, out, _ = run(capsys, "verify", "lemma3")
    assert code == 0 and [c["detail"]["max_index"] for c in json.loads(out)["checks"]] == [4, 2, 2]


def test_cmd_verify_usage_errors(capsys):
    assert run(capsys, "verify", "crown-range", "2..5")[0] == 2
    assert run(capsys, "verify", "lemma5", "--graph", "crown:5")[0] == 2
    assert run(capsys, "verify", "crown-range", "four")[0] == 2


def test_cmd_label(tmp_path, capsys):
    lab = EdgeLabeling.from_one_edges(crown_graph(5), [(0, 6), (0, 7), (0, 8), (0, 9), (1, 5), (1, 7),
                                                       (1, 8), (1, 9), (2, 5), (2, 6)])
    f = tmp_path / "lab.txt"
    f.write_text(to_labeling_text(lab))
    code, out, _ = run(capsys, "label", str(f))
    assert code == 0
    assert json.loads(out) == {"e0": 10, "e1": 10, "v0": 2, "v1": 2, "unlabeled": 6, "index": 0,
                               "edge_friendly": True}
    f.write_text("3\n0 1\n0 1\n1\n")
    assert run(capsys, "label", str(f))[0] == 2


def test_output_flag(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "ebi", "crown:3", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["index_set"] == [0]


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "edgebalance.cli", *argv], capture_output=True, check=False)


def test_subprocess_runs_are_byte_identical():
    for argv in (["ebi", "crown:4", "--jobs", "2"], ["construct", "7"], ["verify", "prop2", "--trials", "5"]):
        a, b = _cli(*argv), _cli(*argv)
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout and a.stdout.endswith(b"\n")
