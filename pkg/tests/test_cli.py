import json
import subprocess
import sys

import pytest

from fcxlab.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_space(capsys):
    code, out, _ = run(["space", "--kind", "cofinite_n", "--set", "[1, 3]"], capsys)
    doc = json.loads(out)
    assert code == 0 and not doc["discrete"]
    assert doc["set"]["clopen"] is False and doc["set"]["clopen_after_removing"] == [1, 3]


def test_space_from_file(tmp_path, capsys):
    p = tmp_path / "s.json"
    p.write_text('{"kind": "finite", "n": 3}')
    code, out, _ = run(["space", "--space", str(p), "--format", "text"], capsys)
    assert code == 0 and "Finite(3)" in out


def test_fn_instance(tmp_path, capsys):
    p = tmp_path / "i.json"
    p.write_text(json.dumps({"space": {"kind": "conv_seq"}, "functions": {"f": {"chi": "inf"}, "g": {"const": 2}}}))
    code, out, _ = run(["fn", "--instance", str(p), "--name", "f"], capsys)
    doc = json.loads(out)
    assert code == 0 and [f["name"] for f in doc["functions"]] == ["f"]
    f = doc["functions"][0]
    assert f["membership"]["FcX"]["member"] and not f["membership"]["Cc"]["member"]
    assert f["socle"] and f["j1"]["member"]


def test_fn_not_member(capsys):
    code, _, err = run(["fn", "--kind", "cofinite_n", "--f", '{"period": 2, "block": [0, 1]}'], capsys)
    assert code == 2 and "not in C_c(X)_F" in err and "reason" in err


def test_separate(capsys):
    code, out, _ = run(["separate", "--kind", "conv_seq", "--a", '{"period": 2, "block": [1, 0]}', "--b", '{"period": 2, "block": [0, 1]}'], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["separated"] and "h" in doc
    code, out, _ = run(["separate", "--kind", "cofinite_n", "--a", '{"period": 2, "block": [1, 0]}', "--b", '{"period": 2, "block": [0, 1]}'], capsys)
    assert code == 0 and not json.loads(out)["separated"]


def test_ideals_report(tmp_path, capsys):
    p = tmp_path / "ideals.json"
    code, out, _ = run(["ideals", "--n", "3", "--report", str(p)], capsys)
    doc = json.loads(p.read_text())
    assert code == 0 and out == ""
    assert (doc["filter_count"], doc["ultrafilter_count"], doc["bijective"]) == (7, 3, True)
    assert {tuple(b["ultrafilter_base"]) for b in doc["bijection"]} == {(0,), (1,), (2,)}


def test_regularity(capsys):
    code, out, _ = run(["regularity", "--kind", "cofinite_n", "--set", '{"period": 2, "block": [1, 0]}'], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["fcp"] and not doc["baer"]
    assert not doc["idempotent_coz_witness"]["found"]


def test_graph_metrics(capsys):
    code, out, _ = run(["graph", "metrics", "--n", "3"], capsys)
    doc = json.loads(out)
    assert code == 0 and (doc["diameter"], doc["girth"], doc["radius"]) == (3, 3, 2)
    assert doc["mismatches"] == [] and doc["cycle_oracle"] == "exhaustive"


def test_graph_dot(tmp_path, capsys):
    p = tmp_path / "g.dot"
    code, _, _ = run(["graph", "metrics", "--n", "2", "--format", "dot", "--out", str(p)], capsys)
    assert code == 0 and p.read_text().count(" -- ") == 4


def test_graph_mismatch_exits_1(monkeypatch, capsys):
    import fcxlab.zdgraph as zd

    monkeypatch.setattr(zd, "distance_closed", lambda f, g, n: 0)
    code, out, _ = run(["graph", "metrics", "--n", "2"], capsys)
    assert code == 1 and json.loads(out)["mismatches"]


def test_verify(tmp_path, capsys):
    p = tmp_path / "r.json"
    code, _, _ = run(["verify", "--max-n", "2", "--suites", "graph,sections5", "--report", str(p)], capsys)
    doc = json.loads(p.read_text())
    assert code == 0 and doc["summary"]["refuted(paper)"] == 2


def test_verify_config_file(tmp_path, capsys):
    p = tmp_path / "c.json"
    p.write_text('{"max_n": 3, "suites": ["ideals"], "seed": 5}')
    code, out, _ = run(["verify", "--config", str(p), "--seed", "6"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["config"]["seed"] == 6 and doc["config"]["suites"] == ["ideals"]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--max-n", "9"],
        ["verify", "--suites", "nope"],
        ["graph", "metrics", "--n", "14"],
        ["graph", "metrics", "--n", "1"],
        ["space", "--kind", "finite"],
        ["space"],
        ["space", "--kind", "finite", "--n", "3", "--format", "dot"],
        ["fn", "--kind", "conv_seq", "--f", '{"period": 0, "block": []}'],
        ["fn", "--kind", "conv_seq", "--f", '{"period": 1,'],
        ["ideals", "--n", "7"],
    ],
)
def test_input_errors_exit_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2 and err.startswith("error:")


def test_parse_error_has_location(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"space":\n  {"kind": }}')
    code, _, err = run(["fn", "--instance", str(p)], capsys)
    assert code == 2 and f"{p}:2:" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["graph", "metrics"])
    assert e.value.code == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "fcxlab", "graph", "metrics", "--n", "2"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["girth"] == 4
