import json
import subprocess
import sys

import pytest

from smallnets.cli import main
from smallnets.geometry import PointSet
from smallnets.table import build_table, to_csv, to_markdown


@pytest.fixture
def pts_file(tmp_path):
    import random

    rng = random.Random(0)
    xs, ys = rng.sample(range(1000), 30), rng.sample(range(1000), 30)
    path = tmp_path / "pts.json"
    path.write_text(json.dumps(PointSet.from_coords(list(zip(xs, ys))).to_dict()))
    return path


def test_generate_then_lower_bound(tmp_path):
    inst = tmp_path / "g.json"
    assert main(["generate", "rect2-lb", "--k", "1", "--out", str(inst)]) == 0
    out = tmp_path / "lb.json"
    assert main(["lower-bound", str(inst), "--out", str(out)]) == 0
    assert json.loads(out.read_text())["fraction"] == "5/9"


def test_generate_missing_param(capsys):
    assert main(["generate", "box-lb", "--k", "2"]) == 2
    assert "--d" in capsys.readouterr().err


@pytest.mark.parametrize("method,extra", [
    ("box-centerpoint", []),
    ("rect2", []),
    ("onept", ["--x", "1", "--y", "0"]),
    ("grid", ["--x", "4", "--y", "2"]),
    ("rect-best", ["--i", "5"]),
    ("hull-walk", ["--i", "3"]),
    ("disk2", []),
])
def test_build_and_verify(tmp_path, pts_file, method, extra):
    net = tmp_path / "net.json"
    assert main(["build", str(pts_file), "--method", method, "--out", str(net), *extra]) == 0
    rep = tmp_path / "rep.json"
    assert main(["verify", str(pts_file), str(net), "--out", str(rep)]) == 0
    d = json.loads(rep.read_text())
    assert d["n"] == 30 and "witness" in d


def test_verify_flags_a_bad_claim(tmp_path, pts_file):
    net = tmp_path / "net.json"
    net.write_text(json.dumps({"family": "boxes", "dim": 2, "strong": True, "members": [0], "claimed_eps": "0"}))
    assert main(["verify", str(pts_file), str(net), "--out", str(tmp_path / "r.json")]) == 1


def test_bad_input_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["build", str(bad), "--method", "rect2"]) == 2


def test_budget_exit_code(tmp_path, pts_file):
    assert main(["lower-bound", str(pts_file), "--family", "boxes", "--i", "4", "--budget", "100", "--out", str(tmp_path / "x")]) == 3


def test_weak_lower_bound_cli(tmp_path):
    inst = tmp_path / "w.json"
    assert main(["generate", "disk-weak3-lb", "--k", "1", "--out", str(inst)]) == 0
    out = tmp_path / "lb.json"
    assert main(["lower-bound", str(inst), "--grid-resolution", "12", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["mode"] == "sampled"


def test_render(tmp_path):
    inst = tmp_path / "g.json"
    main(["generate", "circle-sectors", "--i", "4", "--kk", "2", "--out", str(inst)])
    svg = tmp_path / "g.svg"
    assert main(["render", str(inst), "--out", str(svg)]) == 0
    text = svg.read_text()
    assert text.startswith("<svg") and text.count("<circle") == 9


def test_console_script_runs():
    r = subprocess.run([sys.executable, "-m", "smallnets.cli", "generate", "box-lb", "--d", "2", "--k", "1"], capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["net_size"] == 1


def test_table_is_deterministic_across_jobs():
    a = to_csv(build_table("summary", seed=7, trials=1, jobs=1), 7)
    b = to_csv(build_table("summary", seed=7, trials=1, jobs=3), 7)
    assert a == b
    assert a.startswith("# seed=7\n")


def test_summary_table_rows_pass():
    rows = build_table("summary", seed=1, trials=1)
    assert all(r.status in ("pass", "slack-pass") for r in rows)
    md = to_markdown(rows, 1)
    assert md.count("\n| ") == len(rows) + 1
