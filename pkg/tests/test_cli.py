import json
import subprocess
import sys

import pytest

from solitaire.cli import main


def run_cli(args, tmp_path=None):
    import io
    from contextlib import redirect_stdout, redirect_stderr

    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(args)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)

    return tmp_path, write


TRI_SHAPE = {"group": {"kind": "Zd", "d": 2}, "S": [[0, 0], [1, 0], [0, 1]], "C": "same"}


def test_identify_line4(files):
    _, write = files
    inp = write("line4.json", {"pattern": [[0, 0], [1, 0], [2, 0], [3, 0]]})
    code, out, _ = run_cli(["triangle", "identify", "-i", inp])
    assert code == 0
    assert json.loads(out) == {"components": [{"k": 0, "n": 4, "v": [0, 0]}]}


def test_fill_and_replay_roundtrip(files):
    tmp, write = files
    inp = write("p.json", {"pattern": [[0, 0], [1, 0], [0, 1], [2, 2], [3, 2]]})
    shp = write("shape.json", TRI_SHAPE)
    code, out, _ = run_cli(["triangle", "path", "-i", inp, "-o", str(tmp / "trace.json")])
    assert code == 0
    code, out, _ = run_cli(
        ["replay", "-i", inp, "-s", shp, "-t", str(tmp / "trace.json")]
    )
    assert code == 0
    res = json.loads(out)
    assert res["legal"] is True
    # endpoint equals the identify output pattern
    code, out, _ = run_cli(["triangle", "identify", "-i", inp])
    comps = json.loads(out)["components"]
    from solitaire import triangle as tri

    target = set()
    for comp in comps:
        target.update(tri.pnk_cells(comp["n"], comp["k"], tuple(comp["v"])))
    assert {tuple(c) for c in res["endpoint"]} == target


def test_emitted_pattern_reparses(files):
    tmp, write = files
    inp = write("p.json", {"pattern": [[0, 0], [1, 0]]})
    shp = write("shape.json", TRI_SHAPE)
    code, out, _ = run_cli(["fill", "-i", inp, "-s", shp])
    assert code == 0
    closure = json.loads(out)["closure"]
    inp2 = write("p2.json", {"pattern": closure})
    code2, out2, _ = run_cli(["fill", "-i", inp2, "-s", shp])
    assert json.loads(out2)["closure"] == closure


def test_square_and_orbit_commands(files):
    _, write = files
    inp = write("block.json", {"pattern": [[0, 0], [1, 0], [0, 1], [1, 1]]})
    code, out, _ = run_cli(["square", "identify", "-i", inp])
    assert code == 0
    assert json.loads(out)["components"] == [{"a": 2, "b": 2, "k": 1, "v": [0, 0]}]
    code, out, _ = run_cli(["orbit", "count-free-line", "-n", "6"])
    assert json.loads(out) == {"count": 144, "n": 6}


def test_excess_command(files):
    _, write = files
    inp = write("t2.json", {"pattern": [[0, 0], [1, 0], [0, 1]]})
    shp = write("shape.json", TRI_SHAPE)
    code, out, _ = run_cli(["excess", "-i", inp, "-s", shp])
    assert json.loads(out) == {"excess": 1, "rank": 2}


def test_tep_commands(files):
    _, write = files
    rule = write("rule.json", {"kind": "abelian_sum", "alphabet": 3, "target": 0})
    from solitaire import triangle as tri

    dom = write("t3.json", {"pattern": [list(c) for c in tri.Tri(0, 0, 3).cells()]})
    T = write("T.json", {"pattern": [[0, 0], [2, 0], [0, 2]]})
    code, out, _ = run_cli(
        ["tep", "check-indep", "-i", T, "--rule", rule, "--domain", dom]
    )
    assert code == 0 and json.loads(out) == {"independent": True}
    rule2 = write("rule2.json", {"kind": "abelian_sum", "alphabet": 2, "target": 0})
    code, out, _ = run_cli(
        ["tep", "check-indep", "-i", T, "--rule", rule2, "--domain", dom]
    )
    assert json.loads(out) == {"independent": False}


def test_orbit_graph_exports(files):
    tmp, write = files
    inp = write("l3.json", {"pattern": [[0, 0], [1, 0], [2, 0]]})
    shp = write("shape.json", TRI_SHAPE)
    dot = str(tmp / "orbit.dot")
    adj = str(tmp / "orbit.json")
    code, out, _ = run_cli(
        ["orbit", "bfs", "-i", inp, "-s", shp, "--dot", dot, "--adjacency", adj]
    )
    assert code == 0
    stats = json.loads(out)
    assert stats["size"] == 16
    dot_text = (tmp / "orbit.dot").read_text()
    assert dot_text.startswith("graph orbit {")
    assert dot_text.count(" -- ") == stats["size"] * 0 + dot_text.count(" -- ")
    adjacency = json.loads((tmp / "orbit.json").read_text())
    assert len(adjacency) == 16
    # undirected symmetry
    for v, ws in adjacency.items():
        for w in ws:
            assert v in adjacency[w]


def test_usage_errors(files):
    _, write = files
    code, _, err = run_cli(["triangle", "identify", "-i", "/nonexistent.json"])
    assert code == 2
    bad = write("bad.json", "not a pattern")
    code, _, err = run_cli(["triangle", "identify", "-i", bad])
    assert code == 2


def test_domain_error_exit_code(files):
    _, write = files
    # linear shape with a tiny step cap -> budget error -> exit 1
    shp = write(
        "lin.json",
        {"group": {"kind": "Zd", "d": 2}, "S": [[0, 0], [1, 1], [2, 2]], "C": "same"},
    )
    inp = write("twopts.json", {"pattern": [[0, 0], [1, 1]]})
    code, _, err = run_cli(["fill", "-i", inp, "-s", shp, "--step-cap", "10"])
    assert code == 1
    assert "linear" in err


def test_serve_protocol():
    reqs = [
        {"op": "legal_moves", "shape": TRI_SHAPE, "pattern": [[0, 0], [1, 0]]},
        {"op": "fill", "shape": TRI_SHAPE, "pattern": [[0, 0], [1, 0], [2, 0]]},
        {"op": "identify", "shape": TRI_SHAPE, "pattern": [[0, 0], [1, 0], [0, 1]]},
        {"op": "bogus", "shape": TRI_SHAPE},
    ]
    proc = subprocess.run(
        [sys.executable, "-m", "solitaire.cli", "serve"],
        input="\n".join(json.dumps(r) for r in reqs) + "\n",
        capture_output=True,
        text=True,
        timeout=60,
    )
    lines = [json.loads(l) for l in proc.stdout.splitlines() if l.strip()]
    assert len(lines) == 4
    assert lines[0]["ok"] and len(lines[0]["moves"]) == 2
    assert lines[1]["ok"] and len(lines[1]["closure"]) == 6
    assert lines[2]["ok"] and lines[2]["components"] == [{"k": 1, "n": 2, "v": [0, 0]}]
    assert not lines[3]["ok"]
