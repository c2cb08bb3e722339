import json
import subprocess
import sys

import pytest

from lietori.cli import main


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


@pytest.fixture
def q_elem(tmp_path):
    return write(tmp_path, "q_elem.json", {"n": 2, "q": [["1", "-1"], ["-1", "1"]]})


@pytest.fixture
def q_two(tmp_path):
    return write(tmp_path, "q_2.json", {"n": 2, "q": [["1", "2"], ["1/2", "1"]]})


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_decide_elementary(capsys, q_elem):
    code, out, _ = run(capsys, "decide", q_elem)
    assert code == 0 and out["exists"] is True


def test_decide_non_elementary(capsys, q_two):
    code, out, _ = run(capsys, "decide", q_two)
    assert code == 1 and out["exists"] is False and out["reason"] == "q₁₂=2∉{±1}"


def test_decide_octonion(capsys):
    assert run(capsys, "decide", "--octonion", "3")[0] == 0
    code, _, err = run(capsys, "decide", "--octonion", "2")
    assert code == 2 and json.loads(err)["error"] == "OctonionRankBelow3"


def test_check_matrix(capsys, tmp_path, q_two):
    code, out, _ = run(capsys, "check-matrix", q_two)
    assert code == 0 and out["elementary"] is False
    bad = write(tmp_path, "bad.json", {"q": [["1", "2"], ["3", "1"]]})
    code, out, _ = run(capsys, "check-matrix", bad)
    assert code == 1 and out["checks"][0]["counterexample"] == {"q": [["1", "2"], ["3", "1"]]}


@pytest.mark.parametrize("content", ["{not json", json.dumps({"q": [[1.5, 1], [1, 1]]}), json.dumps([1, 2])])
def test_malformed_input_exits_2(capsys, tmp_path, content):
    path = write(tmp_path, "m.json", content)
    code, out, err = run(capsys, "decide", path)
    assert code == 2 and out is None and "error" in json.loads(err)


def test_missing_file_exits_2(capsys, tmp_path):
    assert run(capsys, "decide", str(tmp_path / "nope.json"))[0] == 2


def test_synthesize_and_verify_round_trip(capsys, tmp_path, q_elem):
    inv = str(tmp_path / "inv.json")
    code, out, _ = run(capsys, "synthesize", q_elem, "--ell", "2", "-o", inv)
    assert code == 0 and out["output"] == inv
    code, out, _ = run(capsys, "verify-involution", inv, "--window", "1")
    assert code == 0 and out["pass"] is True
    assert [c["name"] for c in out["checks"]] == [
        "involution", "bracket", "degree_flip", "minus_id_on_L00", "preserves_g", "commutes_with_ad_eta"]


def test_tampered_involution_fails(capsys, tmp_path, q_elem):
    inv = tmp_path / "inv.json"
    run(capsys, "synthesize", q_elem, "--ell", "2", "-o", str(inv), "--window", "1")
    data = json.loads(inv.read_text())
    for t in data["anti_involution"]["signs"]:
        if t["deg"] == [1, 1]:
            t["sign"] = "1"
    inv.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify-involution", str(inv), "--window", "1")
    assert code == 1 and out["pass"] is False


def test_synthesize_refuses_non_elementary(capsys, q_two):
    code, out, _ = run(capsys, "synthesize", q_two, "--ell", "2")
    assert code == 1 and "q₁₂=2" in out["checks"][0]["detail"]


def test_verify_axioms_all(capsys, q_elem):
    code, out, _ = run(capsys, "verify-axioms", q_elem, "--ell", "2", "--window", "1", "--suite", "all")
    assert code == 0 and [r["suite"] for r in out["reports"]] == ["root_grading", "division", "torus_quantum"]


def test_verify_axioms_octonion(capsys):
    code, out, _ = run(capsys, "verify-axioms", "--octonion", "3", "--suite", "torus", "--window", "1")
    assert code == 0 and out["reports"][0]["suite"] == "torus_octonion"
    assert run(capsys, "verify-axioms", "--octonion", "3", "--suite", "rg")[0] == 2


def test_extract_coordinates(capsys, q_elem, q_two):
    code, out, _ = run(capsys, "extract-coordinates", q_elem, "--ell", "2", "--pairs", "5", "--window", "1")
    assert code == 0 and len(out["reports"]) == 2
    code, out, _ = run(capsys, "extract-coordinates", q_two, "--ell", "2", "--pairs", "5", "--window", "1")
    assert code == 0 and len(out["reports"]) == 1


def test_oracle(capsys, q_elem, q_two):
    code, out, _ = run(capsys, "oracle", q_elem)
    assert code == 0 and out["agrees_with_decide"]
    code, out, _ = run(capsys, "oracle", q_two)
    assert code == 1 and out["agrees_with_decide"]
    assert out["checks"][0]["counterexample"] == {"lam": [0, 1], "mu": [1, 0]}


def test_module_entry_point(q_elem):
    proc = subprocess.run([sys.executable, "-m", "lietori.cli", "decide", q_elem], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["exists"] is True
