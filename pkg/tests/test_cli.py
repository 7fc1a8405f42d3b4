import io
import json
import os
import subprocess
import sys

import pytest

from clasp.cli import main, parse_vector
from clasp.fracfield import RatFunc, parse_ratfunc
from clasp.linkio import builtin_text

SINGULAR = '{"mu": 1, "matrices": {"-": [[0]]}, "allow_unverified_torsion": true}'
CONFLICT = '{"mu": 1, "matrices": {"-": [[1, 1], [0, 1]], "+": [[1, 1], [0, 1]]}}'
NO_COMPLEX = '{"mu": 1, "matrices": {"-": [[-1, 1], [0, -1]]}}'


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), buf)
    return code, buf.getvalue()


def run_process(*argv, stdin=None, env=None):
    return subprocess.run([sys.executable, "-m", "clasp", *argv], input=stdin,
                          capture_output=True, text=True, env=env)


def test_info_hopf2():
    code, out = run("info", "hopf2")
    assert code == 0
    assert "n: 0\n" in out and "totally connected: true" in out and "torsion: true" in out


def test_info_trefoil_json():
    code, out = run("info", "trefoil", "--json")
    data = json.loads(out)
    assert code == 0 and data["n"] == 2 and data["torsion"] is True
    assert data["detH"] == "t^2 - 3*t + 4 - 3*t^-1 + t^-2"
    assert data["pi1"] == {"generators": ["a1"], "relations": []}


def test_transpose_conflict_exits_2(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text(CONFLICT)
    proc = run_process("info", str(f))
    assert proc.returncode == 2
    assert "inconsistent" in proc.stderr and "+, -" in proc.stderr


def test_bl_trefoil():
    code, out = run("bl", "trefoil", "e1", "e1")
    assert code == 0
    assert out == "-t / (t^2 - t + 1) mod Lambda_S\n"
    code, out = run("bl", "trefoil", "e1", "[1, 0]", "--json")
    assert json.loads(out) == {"num": "-t", "den": "t^2 - t + 1", "mod": "Lambda_S"}


def test_bl_needs_hypothesis(tmp_path):
    f = tmp_path / "k.json"
    f.write_text(NO_COMPLEX)
    assert run("bl", str(f), "e1", "e1")[0] == 2
    code, out = run("bl", str(f), "e1", "e1", "--allow-unverified-torsion")
    assert code == 0 and out.startswith("-t / (t^2 - t + 1)")


def test_singular_exits_3(tmp_path):
    f = tmp_path / "s.json"
    f.write_text(SINGULAR)
    assert run("bl", str(f), "e1", "e1")[0] == 3


def test_domain_exits_4():
    assert run("sig", "trefoil", "--omega", "0")[0] == 4


def test_sig_trefoil_csv():
    code, out = run("sig", "trefoil", "--omega", "1/2")
    assert code == 0
    assert out == "angle_1,signature,nullity,certified\n1/2,-2,0,true\n"


def test_sweep_and_sig_sweep_agree():
    a = run("sweep", "torus24", "--axis", "diagonal", "--samples", "3")
    b = run("sig", "torus24", "--sweep", "diagonal", "--samples", "3")
    assert a == b
    assert a[1].splitlines()[2] == "1/2,1/2,-1,0,true"


def test_hopf_sweeps_are_zero():
    for axis in ("1", "2", "diagonal"):
        code, out = run("sweep", "hopf2", "--axis", axis, "--samples", "4")
        assert code == 0
        assert all(line.split(",")[2] == "0" for line in out.splitlines()[1:])


def test_H_output_formats():
    code, out = run("H", "trefoil", "--csv")
    assert out == "t - 2 + t^-1,1 - t^-1\n-t + 1,t - 2 + t^-1\n"
    data = json.loads(run("H", "trefoil", "--json")[1])
    assert data["H"][0][1] == "1 - t^-1" and data["torsion"] is True


def test_selfcheck_passes():
    code, out = run("selfcheck")
    assert code == 0 and out.endswith("selfcheck passed\n")
    assert "FAIL" not in out


def test_examples_lists_and_prints():
    assert run("examples")[1].split() == ["hopf2", "trefoil", "figure8", "torus24"]
    assert run("examples", "torus24")[1] == builtin_text("torus24")


def test_stdin_and_missing_file():
    proc = run_process("info", "-", stdin=builtin_text("figure8"))
    assert proc.returncode == 0 and "n: 2" in proc.stdout
    assert run("info", "/nonexistent/link.json")[0] == 2


def test_outputs_are_byte_identical():
    argv = ("sig", "figure8", "--omega", "1/3", "--json")
    first, second = run_process(*argv), run_process(*argv)
    assert first.returncode == 0 and first.stdout == second.stdout


def test_precision_from_environment():
    env = dict(os.environ, CLASP_PRECISION="64")
    proc = run_process("sig", "figure8", "--omega", "1/5", env=env)
    assert proc.returncode == 0 and proc.stdout == run("sig", "figure8", "--omega", "1/5")[1]
    proc = run_process("sig", "figure8", "--omega", "1/5", "--precision", "8")
    assert proc.returncode == 2


def test_parse_vector():
    assert parse_vector("e2", 2, 1) == [RatFunc.from_int(1, 0), RatFunc.from_int(1, 1)]
    v = parse_vector("[t1/(1 - t2), (t1 + 1)*t2]", 2, 2)
    assert v == [parse_ratfunc("t1/(1 - t2)", 2), parse_ratfunc("t1*t2 + t2", 2)]
    for bad in ("e3", "[1]", "1, 2"):
        with pytest.raises(ValueError):
            parse_vector(bad, 2, 1)
