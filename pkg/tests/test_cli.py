import json
import subprocess
import sys

import pytest

from fixorb.cli import main
from fixorb.realize import load_triple, verify_factor


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_s3(capsys):
    code, out, _ = run(capsys, "gen", "--name", "s3_fix", "--terms", "15")
    assert code == 0
    assert out.strip() == "1,3,1,3,1,9,1,3,1,3,1,9,1,3,1"


def test_check_relative_accepts(capsys):
    code, out, _ = run(capsys, "check", "--mode", "relative", "--terms", "0,-2,0,-2,0,-8")
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] == "realizable-up-to-N"
    assert rep["orbit_counts"] == [0, -1, 0, 0, 0, -1]


def test_check_exact_rejects(capsys):
    code, out, _ = run(capsys, "check", "--mode", "exact", "--terms", "1,2,3,4")
    rep = json.loads(out)
    assert code == 1
    assert rep["first_violation"] == {"index": 2, "reason": "non-integer", "value": "1/2"}


def test_check_horizon(capsys):
    code, out, _ = run(capsys, "check", "--mode", "exact", "--terms", "1,2,3,4", "--horizon", "1")
    assert code == 0 and json.loads(out)["horizon"] == 1
    code, _, err = run(capsys, "check", "--mode", "exact", "--terms", "1,2", "--horizon", "5")
    assert code == 2 and "horizon" in err


def test_transform_orb_renders_fractions(capsys):
    code, out, _ = run(capsys, "transform", "--dir", "orb", "--terms", "1,2,3,4")
    assert code == 0
    assert out.strip().split(",")[1] == "1/2"


def test_transform_round_trip(capsys, monkeypatch):
    import io

    _, out, _ = run(capsys, "transform", "--dir", "orb", "--terms", "-1,9,-16,29,-51,84,-141")
    assert out.strip() == "-1,5,-5,5,-10,15,-20"
    monkeypatch.setattr(sys, "stdin", io.StringIO(out))
    _, back, _ = run(capsys, "transform", "--dir", "fix", "--terms", "-")
    assert back.strip() == "-1,9,-16,29,-51,84,-141"


def test_big_integers_printed_in_full(capsys):
    big = str(2**200)
    _, out, _ = run(capsys, "transform", "--dir", "fix", "--terms", big)
    assert out.strip() == big


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--orb", "0,-1,0,0,0,-1,0,0")
    rep = json.loads(out)
    assert code == 0
    assert rep["decomposition"]["a"] == [[2, 4, 1], [4, 8, 1], [6, 12, 1], [8, 16, 1]]
    assert rep["reconstructed"] == [0, -1, 0, 0, 0, -1, 0, 0]
    code, out, _ = run(capsys, "decompose", "--terms", "0,1")
    assert code == 1 and json.loads(out)["verdict"] == "rejected"


def test_realize_emit_verify(capsys, tmp_path):
    path = tmp_path / "triple.json"
    code, out, _ = run(
        capsys, "realize", "--terms", "-1,1,-1,1,-1,1", "--horizon", "6", "--emit", str(path), "--verify"
    )
    assert code == 0 and json.loads(out)["verification"]["ok"]
    assert verify_factor(load_triple(path.read_text())).ok
    code, out, _ = run(capsys, "verify", "--load", str(path))
    assert code == 0
    first = path.read_text()
    run(capsys, "realize", "--terms", "-1,1,-1,1,-1,1", "--horizon", "6", "--emit", str(path))
    assert path.read_text() == first


def test_classify_bfile(capsys, tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("# S-integer difference\n" + "\n".join(f"{n} {v}" for n, v in
                 enumerate([0, -2, 0, -2, 0, -8], 1)))
    code, out, _ = run(capsys, "classify", "--bfile", str(p))
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] == "relatively-but-not-exactly-realizable-up-to-N"
    p.write_text("0 5\n1 0\n2 1\n")
    code, out, _ = run(capsys, "classify", "--bfile", str(p), "--offset-align", "index1")
    assert code == 1 and json.loads(out)["verdict"] == "not-relatively-realizable"


def test_bfile_errors_exit_2(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("1 x\n")
    code, _, err = run(capsys, "classify", "--bfile", str(p))
    assert code == 2 and "line 1" in err
    code, _, err = run(capsys, "check", "--mode", "exact", "--bfile", str(tmp_path / "missing"))
    assert code == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "--terms", "1"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "gen", "--name", "bogus", "--terms", "3")
    assert code == 2 and "unknown" in err
    code, _, _ = run(capsys, "check", "--mode", "exact", "--terms", "1,a")
    assert code == 2


def test_reports_are_deterministic(capsys):
    outs = {run(capsys, "check", "--mode", "relative", "--terms", "3,1,4,1,5")[1] for _ in range(3)}
    assert len(outs) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fixorb", "gen", "--name", "tmpd_fix", "--terms", "6"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.strip() == "0,4,6,16,30,64"


@pytest.mark.parametrize("terms", ["1,1,1,1", "0,-2,0,-2,0,-8,0,-2", "5,-3,2,7"])
def test_realize_verify_on_accepted_inputs(capsys, terms):
    code, _, _ = run(capsys, "check", "--mode", "relative", "--terms", terms)
    if code == 0:
        n = str(len(terms.split(",")))
        code, out, _ = run(capsys, "realize", "--terms", terms, "--horizon", n, "--verify")
        assert code == 0
