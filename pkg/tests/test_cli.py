import json
import subprocess
import sys

import numpy as np
import pytest

from rrw.cli import main
from rrw.channel import capacity_fn

C = capacity_fn


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("arcs, want", [("3-1", (4, 1)), ("", (1, 1)), ("3-1,3-2,2-3", (7, 2))])
def test_classify(capsys, arcs, want):
    code, out, _ = run(capsys, "classify", "--arcs", arcs)
    js = json.loads(out)
    assert code == 0 and (js["group"], js["k"]) == want


def test_classify_self_loop(capsys):
    code, out, err = run(capsys, "classify", "--arcs", "1-1")
    assert code == 2 and out == "" and "self-loop" in err


def test_bad_channel_is_input_error(capsys):
    code, _, err = run(capsys, "thresholds", "--r1", "0", "--N", "2,1,4")
    assert code == 2 and "ordering" in err


def test_conflicting_graph_flags(capsys):
    code, *_ = run(capsys, "report", "--arcs", "3-1", "--group", "4", "--member", "1")
    assert code == 2


def test_thresholds_zero(capsys):
    code, out, _ = run(capsys, "thresholds", "--r1", "0", "--seed", "7")
    js = json.loads(out)
    assert code == 0
    assert js["r_thr3"] == 0 and js["r_thr3_prime"] == 0 and js["regime"] == "zero"
    assert js["seed"] == 7


def test_thresholds_out_of_range(capsys):
    code, _, err = run(capsys, "thresholds", "--r1", "5")
    assert code == 3 and err


def test_thresholds_wrong_member(capsys):
    code, *_ = run(capsys, "thresholds", "--r1", "0.1", "--group", "7", "--member", "1")
    assert code == 3


def test_report_group7_member7(capsys):
    code, out, _ = run(capsys, "report", "--group", "7", "--member", "7", "--grid", "16")
    js = json.loads(out)
    assert code == 0 and js["verdict"] == "COINCIDES"
    assert {"verdict", "max_gap", "min_gap", "witness_direction", "grid", "tol"} <= set(js["reports"]["capacity"])


def test_report_group4(capsys):
    code, out, _ = run(capsys, "report", "--arcs", "3-1", "--grid", "8")
    js = json.loads(out)
    assert code == 0 and js["verdict"] == "CONTAINED" and js["outer1_only"] is False


def test_report_other_group_is_domain_error(capsys):
    code, *_ = run(capsys, "report", "--arcs", "2-1")
    assert code == 3


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"P": 10, "N": [1, 2, 4], "graph": {"arcs": [[3, 1]]}, "seed": 3}))
    code, out, _ = run(capsys, "thresholds", "--config", str(cfg), "--r1", "0.2")
    base = json.loads(out)
    assert code == 0 and base["seed"] == 3 and base["regime"] == "interior"
    code, out, _ = run(capsys, "thresholds", "--config", str(cfg), "--r1", "0.2", "--P", "20")
    assert json.loads(out)["channel"]["P"] == 20.0
    assert json.loads(out)["r_thr3"] != base["r_thr3"]


def test_bad_config(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text("{not json")
    code, *_ = run(capsys, "classify", "--config", str(cfg))
    assert code == 2


def _read(path):
    lines = path.read_text().splitlines()
    return lines[:2], np.array([[float(v) for v in ln.split(",")] for ln in lines[2:]]).reshape(-1, 2)


def test_region_r1_zero(tmp_path, capsys):
    out = tmp_path / "s"
    code, *_ = run(capsys, "region", "--arcs", "3-1", "--value", "0", "--out", str(out), "--points", "41")
    assert code == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert set(manifest["files"]) == {
        "inner1", "inner2", "hull", "outer1", "outer2", "proposed_outer", "best_outer",
    }
    head, inner1 = _read(out / "inner1.csv")
    assert head == ["fixed_axis,fixed_value,x_axis,y_axis", "1,0,2,3"]
    _, outer1 = _read(out / "outer1.csv")
    assert np.allclose(inner1, outer1, atol=1e-6)
    for f in manifest["files"].values():
        _, xy = _read(out / f)
        assert np.all(np.diff(xy[:, 1]) <= 1e-12)


def test_region_at_r1_capacity_is_empty_for_inners(tmp_path, capsys):
    out = tmp_path / "s"
    code, *_ = run(capsys, "region", "--arcs", "3-1", "--value", repr(C(10)), "--out", str(out))
    assert code == 0
    for name in ("inner1", "inner2", "hull", "best_outer"):
        head, xy = _read(out / f"{name}.csv")
        assert len(xy) == 0


def test_region_value_out_of_range_writes_nothing(tmp_path, capsys):
    out = tmp_path / "s"
    code, _, err = run(capsys, "region", "--arcs", "3-1", "--value", "9", "--out", str(out))
    assert code == 3 and "outside" in err
    assert not out.exists()


def test_region_group7_includes_best_inner(tmp_path, capsys):
    out = tmp_path / "s"
    code, *_ = run(capsys, "region", "--group", "7", "--member", "4", "--fixed-axis", "3",
                   "--value", "0.1", "--out", str(out), "--points", "11")
    assert code == 0
    assert "best_inner" in json.loads((out / "manifest.json").read_text())["files"]


def test_deterministic_bytes(tmp_path, capsys):
    outs = []
    for name in ("a", "b"):
        out = tmp_path / name
        run(capsys, "region", "--arcs", "3-1", "--value", "0.3", "--out", str(out), "--points", "21", "--seed", "5")
        outs.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    assert outs[0] == outs[1]
    a = run(capsys, "report", "--arcs", "3-1", "--grid", "8")[1]
    b = run(capsys, "report", "--arcs", "3-1", "--grid", "8")[1]
    assert a == b


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--seed", "42", "--probes", "500")
    js = json.loads(out)
    assert code == 0 and js["passed"] and js["seed"] == 42
    assert all(c["passed"] for c in js["checks"])


def test_verify_failure_exit_code(capsys, monkeypatch):
    import rrw.verify

    real = rrw.verify.run_checks

    def broken(*a, **k):
        checks = real(*a, **k)
        checks[0]["passed"] = False
        return checks

    monkeypatch.setattr(rrw.verify, "run_checks", broken)
    code, out, _ = run(capsys, "verify", "--probes", "200")
    assert code == 4 and not json.loads(out)["passed"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "rrw", "classify", "--arcs", "3-1,3-2"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["group"] == 7
