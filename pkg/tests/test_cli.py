import json

import pytest

from mwscodes import cli
from mwscodes import code as cd
from mwscodes import construct as cs
from mwscodes import io as mio


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out = capsys.readouterr()
    lines = out.out.strip().splitlines()
    report = json.loads(lines[-1]) if lines and lines[-1].startswith("{") else None
    return rc, out.out, report


def test_construct_geometric_system(capsys, tmp_path):
    path = tmp_path / "g.json"
    rc, text, rep = run(capsys, "construct", "--method", "geometric", "--q", "2", "--k", "3",
                        "--format", "system", "--out", str(path))
    assert rc == 0 and "MWS: true, n=127" in text
    sys = mio.read_system(path)
    assert len(sys.mults) == 7 and sorted(sys.mults.values()) == [2**i for i in range(7)]
    assert rep["mws"] is True and rep["n"] == "127"


@pytest.mark.parametrize("argv", [
    ["--method", "k2", "--q", "5"],
    ["--method", "fano"],
    ["--method", "pg23"],
    ["--method", "triangle", "--q", "4"],
    ["--method", "lift", "--q", "3", "--k", "4"],
    ["--method", "algebraic", "--q", "3", "--k", "2"],
])
def test_construct_then_verify(capsys, tmp_path, argv):
    path = tmp_path / "out"
    rc, _, rep = run(capsys, "construct", *argv, "--out", str(path))
    assert rc == 0 and rep["mws"]
    rc, text, rep = run(capsys, "verify", "--in", str(path))
    assert rc == 0 and rep["mws"] is True and "MWS: true" in text


def test_verify_example_c3(capsys, tmp_path):
    C3 = cs.algebraic(3, 3, r_overrides={2: (1, 6)}, final_step="dim1")[-1].code
    path = tmp_path / "c3.matrix"
    mio.write_matrix(C3, path)
    rc, text, rep = run(capsys, "verify", "--in", str(path))
    assert rc == 0
    assert "weights: 13/13 distinct" in text and "MWS: true" in text
    assert rep["engines_agree"] and rep["meets_lower_bound"]


def test_verify_modes(capsys, tmp_path):
    path = tmp_path / "s.json"
    mio.write_system(cs.geometric(5, 4), path)
    rc, _, rep = run(capsys, "verify", "--in", str(path), "--mode", "characters")
    assert rc == 0 and rep["mode"] == "characters" and rep["characters_distinct"] == 156
    rc, _, rep = run(capsys, "verify", "--in", str(path))
    assert rc == 0 and rep["mode"] == "characters"
    rc, _, _ = run(capsys, "verify", "--in", str(path), "--mode", "codewords")
    assert rc == 3


def test_verify_failure_exit(capsys, tmp_path):
    path = tmp_path / "id.txt"
    mio.write_matrix(cd.LinearCode(2, [[1, 0], [0, 1]]), path)
    rc, text, rep = run(capsys, "verify", "--in", str(path))
    assert rc == 4 and rep["mws"] is False


def test_bounds(capsys):
    rc, text, rep = run(capsys, "bounds", "--q", "3", "--k", "2")
    assert rc == 0
    assert rep["lb_general"] == 6 and rep["geometric_n"] == 15 and rep["theta"] == 4
    rc, _, rep = run(capsys, "bounds", "--q", "3", "--k", "7")
    assert isinstance(rep["geometric_n"], str)


def test_spectrum(capsys, tmp_path):
    path = tmp_path / "p.json"
    mio.write_system(cs.plane_3233(), path)
    rc, text, rep = run(capsys, "spectrum", "--in", str(path))
    assert rc == 0 and rep["divisible_by_q_minus_1"] and rep["sum_ok"]
    assert sum(rep["spectrum"].values()) == 26 and len(rep["spectrum"]) == 13


@pytest.mark.parametrize("argv,code", [
    (["construct", "--method", "geometric", "--q", "6", "--k", "2"], 2),
    (["construct", "--method", "geometric", "--q", "3"], 2),
    (["construct", "--method", "nope"], 2),
    (["frobnicate"], 2),
    (["verify"], 2),
    (["verify", "--in", "/nonexistent/file"], 2),
    (["construct", "--method", "triangle", "--q", "3"], 3),
    (["construct", "--method", "algebraic", "--q", "2", "--k", "2"], 3),
    (["construct", "--method", "k2", "--q", "3", "--k", "3"], 2),
])
def test_exit_codes(capsys, argv, code):
    assert cli.main(argv) == code
    capsys.readouterr()


def test_parse_error_exit(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 1 2\n1 5\n")
    assert cli.main(["verify", "--in", str(path)]) == 2
    assert "error" in capsys.readouterr().err


def test_lift_from_file(capsys, tmp_path):
    src = tmp_path / "plane.json"
    mio.write_system(cs.plane_3233(), src)
    rc, _, rep = run(capsys, "construct", "--method", "lift", "--in", str(src), "--t", "4",
                     "--format", "system")
    assert rc == 0 and rep["n"] == "3191" and rep["k"] == 4
    rc, _, _ = run(capsys, "construct", "--method", "lift", "--in", str(src), "--t", "3")
    assert rc == 3
