import json
import subprocess
import sys

import pytest

from evenhole import __version__
from evenhole.cli import main
from evenhole.generators import GenSpec, render_spec


def write(tmp_path, model):
    spec = GenSpec.parse(model)
    p = tmp_path / f"{spec.name}.graph"
    p.write_text(render_spec(spec))
    return p


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_shortest_json(tmp_path, capsys):
    code, out, _ = run(capsys, "shortest", write(tmp_path, "cycle:8"), "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["status"] == "found" and rep["length"] == 8
    assert rep["hole"] == list(range(1, 9))
    assert rep["version"] == __version__
    assert set(rep) == {"status", "length", "hole", "diagnostics", "version"}
    assert set(rep["diagnostics"]) == {"stage", "long_certificate", "subgraphs"}


def test_shortest_negative_has_no_hole_key(tmp_path, capsys):
    code, out, _ = run(capsys, "shortest", write(tmp_path, "cycle:5"), "--json")
    assert code == 1
    rep = json.loads(out)
    assert rep["status"] == "no_even_hole" and "hole" not in rep and rep["length"] is None


def test_shortest_unresolved(tmp_path, capsys):
    code, out, _ = run(capsys, "shortest", write(tmp_path, "cycle:8"), "--bound", "4", "--json")
    assert code == 3
    assert json.loads(out)["diagnostics"]["reason"]


def test_shortest_timings(tmp_path, capsys):
    _, out, _ = run(capsys, "shortest", write(tmp_path, "cycle:8"), "--json", "--timings")
    assert "total" in json.loads(out)["diagnostics"]["timings_ms"]


def test_shortest_plain_text(tmp_path, capsys):
    code, out, _ = run(capsys, "shortest", write(tmp_path, "shortcut_plant:26:3:0"))
    assert code == 0 and out.startswith("shortest even hole, length 26")


def test_detect(tmp_path, capsys):
    assert run(capsys, "detect", write(tmp_path, "cycle:5")) == (1, "no even hole\n", "")
    assert run(capsys, "detect", write(tmp_path, "cycle:6"))[:2] == (0, "even hole\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["shortest"],
        ["shortest", "missing.graph"],
        ["frobnicate"],
        ["shortest", "FILE", "--bogus"],
        ["shortest", "FILE", "--provider", "nope"],
        ["shortest", "FILE", "--threads", "0"],
        ["shortest", "FILE", "--bound", "2"],
        ["certify", "FILE", "--hole", "1,2,x"],
        ["certify", "FILE", "--hole", "1,2,99"],
        ["gen", "--model", "cycle:2", "-o", "-"],
        ["status", "BIG"],
        ["lemma5", "FILE"],
    ],
)
def test_usage_errors(tmp_path, capsys, argv):
    f = write(tmp_path, "cycle:8")
    big = write(tmp_path, "cycle:30")
    argv = [str(f) if a == "FILE" else str(big) if a == "BIG" else a for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_malformed_file(tmp_path, capsys):
    f = tmp_path / "bad.graph"
    f.write_text("p edge 3 1\ne 1 1\n")
    code, _, err = run(capsys, "shortest", f)
    assert code == 2 and "line 2" in err and "self-loop" in err


def test_certify_plant12(tmp_path, capsys):
    f = write(tmp_path, "shortcut_plant:12:3:0")
    code, out, _ = run(capsys, "certify", f, "--hole", ",".join(map(str, range(1, 13))), "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["valid_hole"] and rep["even"] and rep["shortest"]
    assert rep["good"] is False
    assert rep["worst_shortcuts"] == [{"path": [1, 13, 4], "length": 2, "hole_distance": 3, "shallow": True}]


def test_certify_not_a_hole(tmp_path, capsys):
    f = write(tmp_path, "cycle:8")
    code, out, _ = run(capsys, "certify", f, "--hole", "1,2,3")
    assert (code, out) == (0, "not a hole\n")


def test_lemma_commands(tmp_path, capsys):
    f = write(tmp_path, "shortcut_plant:12:3:0")
    code, out, _ = run(capsys, "lemma4", f, "--json")
    assert code == 0 and json.loads(out)["length"] == 12
    code, out, _ = run(capsys, "lemma5", f, "--assume-long", "--json")
    assert code == 0 and json.loads(out)["lemma5"] is None
    code, out, _ = run(capsys, "lemma5", write(tmp_path, "cycle:26"), "--json")
    assert json.loads(out)["length"] == 26


def test_status(tmp_path, capsys):
    code, out, _ = run(capsys, "status", write(tmp_path, "shortcut_plant:12:3:0"), "--json")
    rep = json.loads(out)
    assert code == 0
    assert (rep["is_bad"], rep["is_shallow"], rep["is_anti_shallow"]) == (True, True, False)
    code, out, _ = run(capsys, "status", write(tmp_path, "cycle:30"), "--force", "--json")
    assert json.loads(out)["is_long"] is True


def test_gen(tmp_path, capsys):
    out_file = tmp_path / "g.graph"
    assert run(capsys, "gen", "--model", "er:12:1/3:7", "-o", out_file)[0] == 0
    assert out_file.read_text().startswith("c gen er 12 1/3 7\np edge 12 ")
    code, out, _ = run(capsys, "gen", "--model", "theta:2:2:3", "-o", "-")
    assert code == 0 and out == render_spec(GenSpec.parse("theta:2:2:3"))


def test_bench(tmp_path, capsys):
    for m in ["cycle:8", "cycle:9", "shortcut_plant:12:3:0", "theta:2:2:3"]:
        write(tmp_path, m)
    code, out, _ = run(capsys, "bench", "--corpus", tmp_path, "--json")
    rows = json.loads(out)["rows"]
    assert code == 0
    assert [r["file"] for r in rows] == sorted(r["file"] for r in rows)
    assert all(r["agree"] for r in rows)


def test_bench_empty_and_malformed(tmp_path, capsys):
    empty = tmp_path / "empty"
    empty.mkdir()
    code, out, _ = run(capsys, "bench", "--corpus", empty)
    assert code == 0 and "0 files" in out
    (empty / "bad.graph").write_text("p edge 2 5\n")
    code, out, _ = run(capsys, "bench", "--corpus", empty, "--json")
    assert code == 2
    assert json.loads(out)["rows"][0]["status"] == "error"
    assert run(capsys, "bench", "--corpus", tmp_path / "nowhere")[0] == 2


def test_module_entry_point(tmp_path):
    f = write(tmp_path, "cycle:6")
    proc = subprocess.run([sys.executable, "-m", "evenhole", "detect", str(f)], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "even hole\n"
