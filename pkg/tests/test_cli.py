import json
import subprocess
import sys

import pytest

from eqforest.cli import main
from eqforest.drawing import Crossing, Drawing
from eqforest.generators import (complete, cycle, ic_augment, path, random_planar,
                                 sharpness_example, star)
from eqforest.io import read_drawing, read_partition, write_drawing


@pytest.fixture
def files(tmp_path):
    def put(name, obj):
        p = tmp_path / name
        if isinstance(obj, str):
            p.write_text(obj)
        else:
            write_drawing(obj, p)
        return str(p)
    return put


def test_verify(files, capsys):
    k4 = files("k4.json", complete(4))
    assert main(["verify", "--graph", k4, "--coloring",
                 files("c.json", '{"m": 2, "assignment": [1, 1, 2, 2]}')]) == 0
    c3 = files("c3.json", cycle(3))
    assert main(["verify", "--graph", c3, "--coloring",
                 files("m.json", '{"m": 1, "assignment": [1, 1, 1]}')]) == 1
    assert "CYCLE" in capsys.readouterr().out
    assert main(["verify", "--graph", c3, "--coloring", "missing.json"]) == 2
    assert main(["verify", "--graph", k4, "--coloring",
                 files("short.json", '{"m": 2, "assignment": [1, 2]}')]) == 2
    st = files("st.json", star(5))
    assert main(["verify", "--graph", st, "--defect", "2", "--coloring",
                 files("s.json", '{"m": 2, "assignment": [1, 1, 1, 2, 2, 2]}')]) == 0
    assert main(["verify", "--graph", st, "--independent", "--coloring",
                 files("s2.json", '{"m": 2, "assignment": [1, 1, 1, 2, 2, 2]}')]) == 1


def test_solve(files, tmp_path, capsys):
    planar = files("p.json", random_planar(25, 3, seed=4))
    out, trace = tmp_path / "part.json", tmp_path / "trace.json"
    assert main(["solve", "--graph", planar, "-m", "4", "-o", str(out),
                 "--trace", str(trace)]) == 0
    assert read_partition(out).m == 4
    moves = json.loads(trace.read_text())
    assert moves and {mv["move"] for mv in moves} <= {"PLACE", "TRANSFER", "EXCHANGE"}
    sharp = files("s.json", sharpness_example(3, 3))
    assert main(["solve", "--graph", sharp, "-m", "2", "--method", "exact"]) == 1
    assert main(["solve", "--graph", sharp, "-m", "2", "--method", "constructive"]) == 4
    capsys.readouterr()
    assert main(["solve", "--graph", sharp, "-m", "3"]) == 0
    assert '"m": 3' in capsys.readouterr().out
    assert main(["solve", "--graph", sharp, "-m", "0"]) == 2


def test_solve_timeout(files):
    big = files("big.json", ic_augment(random_planar(2000, 3, seed=1), 400, seed=1))
    assert main(["solve", "--graph", big, "-m", "5", "--timeout-ms", "1"]) == 4


def test_threshold(files, capsys):
    assert main(["threshold", "--graph", files("t.json", path(6))]) == 0
    assert "va_eq=1 va_eq*=1" in capsys.readouterr().out
    assert main(["threshold", "--graph", files("s.json", sharpness_example(3, 3))]) == 0
    out = capsys.readouterr().out
    assert "va_eq*=3" in out and "feasibility=001111" in out
    assert main(["threshold", "--graph", files("st.json", star(4)), "--independent"]) == 0
    assert "va_eq=3" in capsys.readouterr().out
    assert main(["threshold", "--graph", files("e.json", '{"n": 0, "edges": []}')]) == 2


def test_bounds(files, capsys):
    k6 = Drawing(complete(6), (Crossing((0, 1), (2, 3)),))
    assert main(["bounds", "--graph", files("k6.json", k6)]) == 1
    assert "density=FAIL" in capsys.readouterr().out
    d = ic_augment(random_planar(40, 5, seed=8), 10, seed=8, min_girth=5)
    assert main(["bounds", "--graph", files("g5.json", d)]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and ("F=5" in out or "F=4" in out)
    assert main(["bounds", "--graph", files("tree.json", path(7))]) == 0
    out = capsys.readouterr().out
    assert "girth=INFINITE" in out and "edge_bound=vacuous" in out


def test_generate(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for dest in (a, b):
        assert main(["generate", "--family", "ic", "--n", "30", "--girth", "4",
                     "--seed", "3", "-o", str(dest)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert read_drawing(a).crossings
    for args in (["--family", "planar", "--n", "10"], ["--family", "star", "--delta", "4"],
                 ["--family", "cycle", "--n", "5"], ["--family", "complete", "--n", "4"],
                 ["--family", "sharpness", "--k", "3"], ["--family", "fan", "--path-len", "5"],
                 ["--family", "subdivide", "--r", "2", "--k", "3"]):
        assert main(["generate", *args, "-o", str(tmp_path / "g.json")]) == 0
    assert read_drawing(tmp_path / "g.json").n == 3 + 3 * 2
    assert main(["generate", "--family", "star"]) == 2
    assert main(["generate", "--family", "nope"]) == 2
    assert main(["generate", "--family", "corpus", "--count", "3", "--girth", "5",
                 "-o", str(tmp_path / "corpus")]) == 0
    assert len(list((tmp_path / "corpus").glob("ic-g5-*.json"))) == 3
    assert (tmp_path / "corpus" / "manifest.json").exists()


def test_experiment(tmp_path, files):
    empty = tmp_path / "empty"
    empty.mkdir()
    report = tmp_path / "r.csv"
    assert main(["experiment", "--corpus", str(empty), "--report", str(report)]) == 0
    assert report.read_text().count("\n") == 1

    corpus = tmp_path / "g3"
    assert main(["generate", "--family", "corpus", "--count", "12", "--girth", "3",
                 "--seed", "1", "-o", str(corpus)]) == 0
    r1, r2 = tmp_path / "r1.csv", tmp_path / "r2.csv"
    assert main(["experiment", "--corpus", str(corpus), "--report", str(r1),
                 "--m-range", "8..12", "--no-timing"]) == 0
    assert main(["experiment", "--corpus", str(corpus), "--report", str(r2),
                 "--m-range", "8..12", "--no-timing", "--jobs", "2"]) == 0
    assert r1.read_bytes() == r2.read_bytes()
    rows = r1.read_text().splitlines()[1:]
    assert len(rows) == 12
    for row in rows:
        lo, hi = map(int, row.split(",")[5].split(".."))
        assert row.split(",")[6] == "1" * (hi - lo + 1)

    sharp = tmp_path / "sharp"
    sharp.mkdir()
    write_drawing(sharpness_example(3, 3), sharp / "sharp.json")
    assert main(["experiment", "--corpus", str(sharp), "--report", str(report),
                 "--m-range", "2..2"]) == 0
    assert "UNSAT@2" in report.read_text()
    assert main(["experiment", "--corpus", str(tmp_path / "nope"), "--report",
                 str(report)]) == 2
    assert main(["experiment", "--corpus", str(sharp), "--report", str(report),
                 "--m-range", "3..1"]) == 2


def test_experiment_flags_contradiction(tmp_path):
    # K4 drawn with no crossings is planar (a valid IC claim) with girth 3;
    # an m-range reaching 1 is below F, so only UNSAT flags, no contradiction
    d = tmp_path / "k4"
    d.mkdir()
    write_drawing(complete(4), d / "k4.json")
    assert main(["experiment", "--corpus", str(d), "--report", str(tmp_path / "r.csv"),
                 "--m-range", "1..4"]) == 0
    text = (tmp_path / "r.csv").read_text()
    assert "UNSAT@1" in text and "CONTRADICTION" not in text and ",0111,2,2," in text


def test_module_entry_point(files):
    k4 = files("k4.json", complete(4))
    proc = subprocess.run([sys.executable, "-m", "eqforest", "threshold", "--graph", k4],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "va_eq=2 va_eq*=2" in proc.stdout
