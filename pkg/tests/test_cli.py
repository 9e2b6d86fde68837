import json
import subprocess
import sys

import pytest

from lambdapack.cli import main
from lambdapack.generators import gen_net, gen_prism
from lambdapack.graph import cycle_graph
from lambdapack.graphio import to_graph6


@pytest.fixture
def g6file(tmp_path):
    def make(*graphs):
        p = tmp_path / "in.g6"
        p.write_text("".join(to_graph6(g) + "\n" for g in graphs))
        return str(p)
    return make


def _json_lines(out):
    return [json.loads(x) for x in out.strip().splitlines()]


def test_generate_writes_manifest(tmp_path, capsys):
    out = tmp_path / "gen"
    assert main(["generate", "--family", "clawfreeRandom", "--params", '{"n": 8}', "--count", "3", "--out", str(out)]) == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert [m["file"] for m in manifest] == [f"clawfreeRandom-{i:04d}.g6" for i in range(3)]
    assert [m["params"]["seed"] for m in manifest] == [0, 1, 2]


def test_oracle_and_pack(g6file, capsys):
    f = g6file(gen_net(), cycle_graph(9))
    assert main(["oracle", "--input", f]) == 0
    assert [r["value"] for r in _json_lines(capsys.readouterr().out)] == [1, 3]
    assert main(["pack", "--input", f, "--seed", "1"]) == 0
    assert [r["size"] for r in _json_lines(capsys.readouterr().out)] == [1, 3]


def test_edgelist_input(tmp_path, capsys):
    p = tmp_path / "g.txt"
    p.write_text("4 3\n0 1\n1 2\n2 3\n")
    assert main(["--in", "edgelist", "oracle", "--mode", "factor", "--input", str(p)]) == 0
    assert _json_lines(capsys.readouterr().out)[0]["value"] is False


def test_decompose(g6file, capsys):
    assert main(["decompose", "--input", g6file(gen_net())]) == 0
    d = _json_lines(capsys.readouterr().out)[0]
    assert d["cactus"] and not d["chain"]


def test_theorem_specific_call(g6file, capsys):
    assert main(["theorem", "--name", "avoid-e", "--edge", "0,1", "--input", g6file(gen_prism())]) == 0
    cert = _json_lines(capsys.readouterr().out)[0]
    assert cert["theorem"] == "avoid-e" and cert["checks_passed"]["constraint"]


def test_theorem_specific_failure_exit_code(g6file, capsys):
    code = main(["theorem", "--name", "delta-L", "--path", "1,0,3", "--mode", "with-triangle",
                 "--input", g6file(gen_prism())])
    assert code == 3
    assert _json_lines(capsys.readouterr().out)[0]["status"] == "algorithm-bug-candidate"


def test_theorem_check_and_unknown(g6file, capsys):
    f = g6file(gen_prism())
    assert main(["theorem", "--name", "avoid-e", "--input", f, "--certificates"]) == 0
    rep = _json_lines(capsys.readouterr().out)[0]
    assert rep["status"] == "confirmed" and len(rep["certificates"]) == 9
    assert main(["theorem", "--name", "bogus", "--input", f]) == 1
    assert "valid ids" in capsys.readouterr().err


def test_domination_and_linegraph(g6file, capsys):
    f = g6file(cycle_graph(6))
    assert main(["domination", "--input", f]) == 0
    assert _json_lines(capsys.readouterr().out)[0]["witness"]["gamma"] == 2
    assert main(["linegraph", "--op", "edge3factor", "--input", f]) == 0
    assert len(_json_lines(capsys.readouterr().out)[0]["parts"]) == 2
    assert main(["linegraph", "--op", "lambda_e", "--input", f]) == 0
    r = _json_lines(capsys.readouterr().out)[0]
    assert r["value"] == r["matching_route"] == 3


def test_campaign_to_file(tmp_path, capsys):
    out = tmp_path / "r.jsonl"
    code = main(["campaign", "--theorems", "2conclfr,pr3con", "--family", "cycle", "--params", '{"n": 6}',
                 "--count", "2", "--out", str(out), "--jobs", "2"])
    assert code == 0
    rows = [json.loads(x) for x in out.read_text().splitlines()]
    assert [r["theorem"] for r in rows] == ["2conclfr", "pr3con"] * 2
    summary = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert summary["confirmed"] == 2


def test_usage_errors(capsys):
    assert main([]) == 1
    assert main(["oracle", "--mode", "nope"]) == 1
    assert main(["campaign", "--theorems", "2conclfr"]) == 1


def test_module_entry_point(g6file):
    r = subprocess.run([sys.executable, "-m", "lambdapack", "oracle", "--format", "text", "--input", g6file(gen_net())],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("value=1")
