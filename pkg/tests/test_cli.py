"""End-to-end tests of the command line driver."""

import json
import subprocess
import sys

import pytest

from sympl.cli import main
from sympl.lfactors import SatakeDatum, gk_value
from sympl.orbitclassify import HYPOTHESIS_NAMES, classify_levels
from sympl.serialize import classification_to_json, rational_to_json


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


def test_classify_levels_table(capsys):
    code, lines, _ = run(capsys, ["classify-levels", "--n", "2", "--i", "1", "--inner", "5"])
    assert code == 0
    assert lines == [
        "x_max: 5",
        "class 1: 0, 4",
        "class 2: 1, 3",
        "class 3: 2",
        "class 4: 5",
        "y: 0, 1, 2, 5",
        "bijective: true",
    ]


def test_classify_levels_json_matches_library(capsys):
    code, lines, _ = run(
        capsys, ["classify-levels", "--n", "2", "--i", "1", "--inner", "5", "--json"]
    )
    assert code == 0
    payload = json.loads("\n".join(lines))
    assert payload == classification_to_json(classify_levels((5,), 2, 1))


def test_classify_levels_top_index(capsys):
    code, lines, _ = run(
        capsys, ["classify-levels", "--n", "2", "--i", "2", "--x-max", "5"]
    )
    assert code == 0
    assert lines == [
        "x_max: 5",
        "class 1: 0, 3",
        "class 2: 1, 2",
        "class 3: 4",
        "class 4: 5",
        "y: 0, 1, 4, 5",
        "bijective: true",
    ]


def test_reduction_point(capsys):
    code, lines, _ = run(capsys, ["reduction-point", "--weight", "4,3,3"])
    assert code == 0
    assert lines == ["2"]


def test_unitary(capsys):
    code, lines, _ = run(capsys, ["unitary", "--weight", "4,3,3"])
    assert code == 0
    assert lines == ["true"]
    code, lines, _ = run(capsys, ["unitary", "--weight=-1,-1"])
    assert code == 0
    assert lines == ["false"]


def test_infchar_and_dominant(capsys):
    code, lines, _ = run(capsys, ["infchar", "--weight", "3,3"])
    assert code == 0
    assert lines == ["2,1"]
    code, lines, _ = run(capsys, ["dominant", "--weight", "3,3"])
    assert code == 0
    assert lines == ["3,3", "3,1", "2,0", "0,0"]


def test_suffreg(capsys):
    code, lines, _ = run(capsys, ["suffreg", "--weight", "3,3", "--i", "1"])
    assert code == 0
    assert lines == ["false"]


def test_orbit_exit_codes(capsys):
    code, lines, _ = run(capsys, ["orbit", "--weight", "3"])
    assert code == 0
    assert lines == ["true"]
    code, _, err = run(capsys, ["orbit", "--weight", "3,3"])
    assert code == 1
    assert err.startswith("error: HypothesisViolated:")


def test_usage_errors(capsys):
    assert main(["no-such-command"]) == 2
    capsys.readouterr()
    assert main(["suffreg", "--weight", "3,3"]) == 2
    capsys.readouterr()
    code, _, err = run(capsys, ["orbit", "--weight", "junk"])
    assert code == 2
    assert err.startswith("usage error:")
    code, _, err = run(capsys, ["fourier", "/no/such/file.txt"])
    assert code == 2
    assert err.startswith("usage error:")


def test_embed_forward(capsys):
    code, lines, _ = run(capsys, ["embed", "--weight", "7,5,5", "--i", "2"])
    assert code == 0
    assert lines == ["n=3 i=2 parity=1 exponent=5/2 inner=7"]


def test_embed_invert(capsys):
    code, lines, _ = run(
        capsys,
        ["embed", "--invert", "--n", "2", "--i", "2", "--parity", "1", "--exponent=-1/2"],
    )
    assert code == 0
    assert lines == ["1,1"]
    code, lines, _ = run(
        capsys,
        [
            "embed", "--invert", "--n", "2", "--i", "1",
            "--parity", "0", "--exponent", "3", "--inner", "5",
        ],
    )
    assert code == 0
    assert lines == ["none"]
    code, _, err = run(capsys, ["embed", "--invert", "--i", "1"])
    assert code == 2
    assert err.startswith("usage error:")
    code, _, err = run(capsys, ["embed", "--i", "1"])
    assert code == 2


def test_principal_and_degenerate(capsys):
    code, lines, _ = run(capsys, ["principal", "--weight", "5,3"])
    assert code == 0
    assert lines == ["(1,1) (1,4)"]
    code, lines, _ = run(capsys, ["degenerate", "--weight", "4,4"])
    assert code == 0
    assert lines == ["parity=0 exponent=5/2"]


def test_report_lines(capsys):
    code, lines, _ = run(capsys, ["report", "--weight", "12,12", "--i", "1"])
    assert code == 0
    for name in HYPOTHESIS_NAMES:
        assert f"{name}: pass" in lines
    assert "conclusion: IsotypicDescription" in lines
    assert "parity class: +1" in lines
    assert "exponent: 10" in lines
    assert "inner weight: 12" in lines
    assert any(line.startswith("assumption:") for line in lines)


def test_report_character_flip(capsys):
    code, lines, _ = run(capsys, ["report", "--weight", "12,12", "--i", "1", "--char=-1"])
    assert code == 0
    assert "conclusion: VanishesWrongParity" in lines
    code, lines, _ = run(capsys, ["report", "--weight", "12,12", "--i", "1", "--char", "+1"])
    assert code == 0
    assert "conclusion: IsotypicDescription" in lines


def test_surjectivity(capsys):
    code, lines, _ = run(capsys, ["surjectivity", "--weight", "11,11", "--level", "12"])
    assert code == 0
    assert lines == ["verdict: NotCovered", "failed: level_squarefree"]
    code, lines, _ = run(capsys, ["surjectivity", "--weight", "11,11", "--primes", "2,3"])
    assert code == 0
    assert lines == ["verdict: SurjectiveByTheorem"]
    code, _, err = run(
        capsys, ["surjectivity", "--weight", "11,11", "--level", "6", "--primes", "2"]
    )
    assert code == 2
    code, _, err = run(capsys, ["surjectivity", "--weight", "11,11"])
    assert code == 2


def test_xi_and_gk(capsys):
    code, lines, _ = run(capsys, ["xi", "--i", "0"])
    assert code == 0
    assert lines == ["1"]
    code, lines, _ = run(capsys, ["gk", "--i", "1", "--j", "1"])
    assert code == 0
    assert lines == ["(1 - Q^-2*T*X) / (1 - T*X)"]
    code, lines, _ = run(capsys, ["gk", "--i", "1", "--j", "1", "--json"])
    assert code == 0
    payload = json.loads("\n".join(lines))
    assert payload == rational_to_json(gk_value(1, 1, SatakeDatum()))
    code, _, err = run(capsys, ["gk", "--i", "1", "--j", "2"])
    assert code == 1
    assert err.startswith("error: IndexOutOfRange:")


def test_eval(capsys):
    code, lines, _ = run(
        capsys,
        ["eval", "--kind", "gk", "--i", "1", "--j", "1", "--at", "X=1,Q=2,T=1/16"],
    )
    assert code == 0
    assert lines == ["21/20"]
    code, _, err = run(capsys, ["eval", "--kind", "gk", "--i", "1", "--at", "X=1"])
    assert code == 2
    code, _, err = run(
        capsys,
        ["eval", "--kind", "gk", "--i", "1", "--j", "1", "--at", "X=1,Q=1,T=1"],
    )
    assert code == 1
    assert err.startswith("error: PoleAtPoint:")


def test_fourier_file(capsys, tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("n=2 k=4\n0,0,2 : 5\n1,0,1 : 7\n")
    code, lines, _ = run(capsys, ["fourier", str(path)])
    assert code == 0
    assert lines == [
        "n: 2",
        "k: 4",
        "support size: 2",
        "cusp condition: true",
        "cuspidal: false",
        "filtration index: 2",
        "0,0,2 : 5",
        "1,0,1 : 7",
    ]


def test_phi_file(capsys, tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("n=2 k=4\n0,0,2 : 5\n1,0,1 : 7\n")
    code, lines, _ = run(capsys, ["phi", str(path)])
    assert code == 0
    assert lines == ["n=1 k=4", "2 : 5"]


def test_grid(capsys):
    code, lines, _ = run(capsys, ["grid", "--n", "2", "--bounds", "1"])
    assert code == 0
    assert lines == [
        "n: 2",
        "d: 1",
        "points: 8",
        "diagonal offsets: 8",
        "nominal offsets: 2",
        "deviation: true",
        "bad points: 1",
        "witness: [2, 2; 2, 2]",
    ]


def test_pit(capsys):
    code, lines, _ = run(
        capsys, ["pit", "--poly", "x_1_1_1 - x_1_1_1", "--n", "1", "--bounds", "1"]
    )
    assert code == 0
    assert lines == ["vanishes: true"]
    code, lines, _ = run(capsys, ["pit", "--poly", "x_1_1_1", "--n", "2", "--bounds", "1"])
    assert code == 0
    assert lines == ["vanishes: false", "deviation: true"]
    code, _, err = run(
        capsys, ["pit", "--poly", "x_1_1_1^3", "--n", "1", "--bounds", "1"]
    )
    assert code == 1
    assert err.startswith("error: DegreeExceedsGrid:")


def test_orbit_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("SYMPL_ORBIT_CAP", "2")
    code, _, err = run(capsys, ["dominant", "--weight", "3,2,1"])
    assert code == 1
    assert err.startswith("error: RankTooLarge:")
    monkeypatch.setenv("SYMPL_ORBIT_CAP", "9")
    code, lines, _ = run(capsys, ["dominant", "--weight", "9,8,7,6,5,4,3,2,1"])
    assert code == 0
    assert lines[0] == "9,8,7,6,5,4,3,2,1"
    monkeypatch.setenv("SYMPL_ORBIT_CAP", "0")
    code, _, err = run(capsys, ["dominant", "--weight", "3,2,1"])
    assert code == 2


def test_module_invocation():
    result = subprocess.run(
        [sys.executable, "-m", "sympl.cli", "reduction-point", "--weight", "4,3,3"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout == "2\n"
