import json
import subprocess
import sys
from pathlib import Path

import pytest

from semitoric.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["word", "reduce", "S^2T^-1ST^2ST^3ST^2ST^2"], "T^-1ST^2ST^3ST^2ST^2\n"),
        (["word", "winding", "S^4"], "12/12\n"),
        (["word", "eval", "ST^2ST^2"], "[[-1,-2],[2,3]]\n"),
        (["word", "eqg", "S^2", "S^-2"], "false\n"),
        (["word", "eqg", "STS", "T^-1ST^-1"], "true\n"),
        (["helix", "classify", "-c", "1", "-v", "(0,1),(-1,1),(0,-1)"], "Type3(k=1)\n"),
        (["fan", "classify", "-v", "(1,0),(0,1),(-1,-2),(0,-1)"], "Hirzebruch(-2)\n"),
        (["fan", "validate", "-v", "(1,0),(0,1),(-1,-1)"], "valid fan d=3\n"),
    ],
)
def test_examples(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected


def test_reduce_trace(capsys):
    code, out, _ = run(capsys, "word", "reduce", "--trace", "ST^-1S")
    assert code == 0 and out.splitlines() == ["R2@1", "TST"]


def test_exit_codes(capsys):
    code, _, err = run(capsys, "fan", "validate", "-v", "(1,0),(0,2)")
    assert code == 1 and "NotPrimitive(1)" in err
    code, _, err = run(capsys, "word", "eval", "ST^")
    assert code == 2 and "offset 3" in err
    code, _, _ = run(capsys, "helix", "validate", "-c", "1", "-v", "(0,1),(1,2)")
    assert code == 1
    code, _, _ = run(capsys, "helix", "validate", "-v", "(0,1),(1,2)")
    assert code == 2
    code, _, _ = run(capsys, "polygon", "validate", str(DATA / "missing.json"))
    assert code == 2


def test_from_seed(capsys):
    code, out, _ = run(capsys, "helix", "from-seed", "-c", "2", "-A", "ST^2ST^2")
    obj = json.loads(out)
    assert code == 0 and obj["format"] == 1 and obj["c"] == 2
    assert obj["vectors"][:2] == [[-1, 2], [-2, 3]]
    code, out2, _ = run(capsys, "helix", "from-seed", "-c", "2", "-A", "[[-1,-2],[2,3]]")
    assert out2 == out
    code, _, err = run(capsys, "helix", "from-seed", "-c", "2", "-A", "T")
    assert code == 1 and "SeedNotInS" in err


def test_from_word(capsys):
    code, out, _ = run(capsys, "helix", "from-word", "-c", "2", "-w", "ST^-2ST^-2")
    assert code == 0 and json.loads(out)["d"] == 2
    code, _, err = run(capsys, "helix", "from-word", "-c", "1", "-w", "ST^5ST^5")
    assert code == 1 and "WrongWinding" in err


def test_helix_blowup_minimize(capsys, tmp_path):
    src = tmp_path / "h.json"
    code, out, _ = run(capsys, "helix", "blowup", "-c", "2", "-v", "(0,1),(-1,-1)", "-i", "1", "-o", str(src))
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "helix", "minimize", str(src))
    obj = json.loads(out)
    assert obj["d"] == 2 and obj["trace"] == [2]
    code, out, _ = run(capsys, "helix", "minimize", "--exhaustive", str(DATA / "type2_blown_up.json"))
    assert out == "2:2:(-2,-2)\n"
    code, out, _ = run(capsys, "helix", "blowdown", str(src), "-i", "2")
    assert json.loads(out)["vectors"] == [[0, 1], [-1, -1]]
    code, _, err = run(capsys, "helix", "blowdown", str(src), "-i", "0")
    assert code == 1 and "NotBlowdownSite" in err


def test_helix_word_and_validate(capsys):
    code, out, _ = run(capsys, "helix", "word", "-c", "2", "-v", "(0,1),(-1,-1)")
    assert out == "ST^-2ST^-2\n"
    code, out, _ = run(capsys, "helix", "validate", str(DATA / "type2_blown_up.json"))
    assert out.splitlines() == ["valid helix d=4 c=2", "4:2:(0,1,0,1)"]


def test_fan_minimize(capsys):
    code, out, _ = run(capsys, "fan", "minimize", "-v", "(1,0),(1,1),(0,1),(-1,-1)")
    obj = json.loads(out)
    assert obj["model"] == "CP2" and obj["trace"] == [1] and obj["vectors"] == [[1, 0], [0, 1], [-1, -1]]
    code, out, _ = run(capsys, "fan", "minimize", "--exhaustive", "-v", "(1,0),(2,1),(1,1),(0,1),(-1,-1)")
    assert out.splitlines() == ["CP2", "Hirzebruch(2)"]


def test_polygon_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "polygon", "to-helix", str(DATA / "coupled_spin.json"))
    obj = json.loads(out)
    assert code == 0 and obj["vectors"] == [[0, 1], [-1, 1], [0, -1]] and obj["c"] == 1
    code, out, _ = run(capsys, "polygon", "validate", str(DATA / "coupled_spin.json"))
    assert out == "valid polygon: 4 corners, 3 Delzant, 0 Hidden, 1 Fake\n"
    code, out, _ = run(capsys, "polygon", "from-helix", "-c", "2", "-v", "(0,1),(-1,-1)")
    obj = json.loads(out)
    assert len(obj["vertices"]) == 4 and obj["corners"].count("Fake") == 2
    p = tmp_path / "p.json"
    p.write_text(out)
    code, out, _ = run(capsys, "polygon", "to-helix", str(p))
    assert json.loads(out)["vectors"] == [[0, 1], [-1, -1]]


def test_render_outputs_svg(capsys, tmp_path):
    code, out, _ = run(capsys, "polygon", "render", str(DATA / "coupled_spin.json"))
    assert out.startswith("<svg") and "stroke-dasharray" in out
    assert out.count("<circle") == 3 and out.count('stroke="red" stroke-width="2"') == 1
    code, out, _ = run(capsys, "helix", "render", "-c", "2", "-v", "(0,1),(-1,-1)")
    assert "c=2" in out and "v1" in out
    svg = tmp_path / "f.svg"
    code, out, _ = run(capsys, "fan", "render", "-v", "(1,0),(0,1),(-1,-1)", "-o", str(svg))
    assert svg.read_text().startswith("<svg") and out == ""


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "minimal-words", "--max-d", "3", "--max-abs", "4", "--max-c", "2")
    assert code == 0 and out.splitlines()[-1] == "result: ok"
    code, out, _ = run(capsys, "verify", "winding-oracle", "--samples", "50")
    assert code == 0 and "checked: 50" in out
    code, out, _ = run(capsys, "verify", "fulton", "--depth", "2", "--max-abs", "2")
    assert code == 0


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    from semitoric import cli, verify

    def broken(**kw):
        rep = verify.Report("fulton", checked=1, found=["CP2", "Oops"], expected=["CP2"])
        return rep

    monkeypatch.setitem(cli.SUITES, "fulton", broken)
    code, out, _ = run(capsys, "verify", "fulton")
    assert code == 3 and "unexpected: Oops" in out and "result: MISMATCH" in out


def test_deterministic_output():
    argv = [sys.executable, "-m", "semitoric", "polygon", "from-helix", "-c", "3", "-v", "(1,0),(0,1),(-1,-1)"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a


def test_stdin_input():
    text = (DATA / "coupled_spin.json").read_text()
    r = subprocess.run(
        [sys.executable, "-m", "semitoric", "polygon", "to-helix", "-"], input=text, capture_output=True, text=True
    )
    assert r.returncode == 0 and json.loads(r.stdout)["d"] == 3
