import json
from pathlib import Path

import pytest

from markedschemes.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"
J3 = "x2^2,x2*x1,x1^3"
MARKED = str(DATA / "marked_j3.txt")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_ok(capsys):
    code, out, _ = run(capsys, "check", J3, "--vars", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["strongly_stable"] and data["saturated"]


def test_check_rejects(capsys):
    code, out, _ = run(capsys, "check", "x2^2,x1^2", "--vars", "3")
    assert code == 2
    assert "strongly_stable: false" in out
    assert "(x2/x1)*x1^2" in out


def test_missing_vars_is_input_error(capsys):
    code, _, err = run(capsys, "sous-escalier", J3, "--degree", "2")
    assert code == 2 and "--vars" in err


def test_sous_escalier_and_star(capsys):
    code, out, _ = run(capsys, "sous-escalier", J3, "--vars", "3", "--degree", "3")
    assert code == 0 and out.strip().split(",") == ["x2*x0^2", "x1^2*x0", "x1*x0^2", "x0^3"]
    code, out, _ = run(capsys, "star-decompose", J3, "x2^2*x1", "--vars", "3")
    assert code == 0 and "x2^2" in out and "x1" in out


def test_reduce_worked_example(capsys):
    code, out, _ = run(capsys, "reduce", J3, "--vars", "3", "--marked", MARKED, "x2^3")
    assert code == 0
    assert out.strip() == "-6*x1^2*x0 + x2*x0^2 - 2*x1*x0^2"


def test_reduce_trace(capsys):
    code, out, _ = run(capsys, "reduce", J3, "--vars", "3", "--marked", MARKED, "--trace", "x2^2*x1")
    assert code == 0
    assert out.strip().splitlines()[-1] == "-10*x1^2*x0 + x1*x0^2"
    assert "subtract" in out


@pytest.mark.parametrize("ring, code", [("ZZ", 1), ("QQ", 1), ("ZZ/5", 0), ("ZZ/2", 0)])
def test_basis_test_exit_codes(capsys, ring, code):
    got, out, _ = run(capsys, "basis-test", J3, "--vars", "3", "--marked", MARKED, "--ring", ring)
    assert got == code
    assert out.startswith("basis: " + ("true" if code == 0 else "false"))


def test_json_determinism_and_round_trip(capsys, tmp_path):
    target = tmp_path / "eqs.json"
    run(capsys, "mf-equations", J3, "--vars", "3", "--format", "json", "--output", str(target))
    first = target.read_text()
    run(capsys, "mf-equations", J3, "--vars", "3", "--format", "json", "--output", str(target), "--jobs", "2")
    assert target.read_text() == first
    data = json.loads(first)
    assert len(data["generators"]) == 8
    ideal_file = tmp_path / "ideal.json"
    ideal_file.write_text(json.dumps(data["ideal"]))
    code, out, _ = run(capsys, "hilbert", "@" + str(ideal_file), "--format", "json")
    assert code == 0 and json.loads(out)["gotzmann_number"] == 4


def test_gs_equations(capsys):
    code, out, _ = run(capsys, "gs-equations", J3, "--vars", "3", "--order", "deglex", "--format", "json")
    assert code == 0
    assert json.loads(out)["vanishing_params"] == ["C[0,3,0|2,0,1]"]
    code, _, err = run(capsys, "gs-equations", "x2,x1^2,x1*x0", "--vars", "3")
    assert code == 2 and "truncation" in err


def test_embedding_report(capsys):
    code, out, _ = run(capsys, "embedding-report", "x2^2,x2*x1,x1^4", "--vars", "3", "--format", "json")
    assert code == 0
    rows = {r["s"]: r for r in json.loads(out)["degrees"]}
    assert rows[3] == {"s": 3, "equal_to_next": False, "status": "open"}
    code, _, _ = run(capsys, "embedding-report", "x2,x1^2,x1*x0", "--vars", "3")
    assert code == 2


def test_aux_basis_and_obstructions(capsys):
    code, out, _ = run(capsys, "aux-basis", J3, "--vars", "3", "--marked", MARKED, "--degree", "3")
    assert code == 0 and "f~[x2^3] = x2^3 + 6*x1^2*x0 - x2*x0^2 + 2*x1*x0^2" in out
    code, out, _ = run(capsys, "obstructions", J3, "--vars", "3", "--marked", MARKED, "--degree", "3")
    assert code == 0 and out.strip() == "s=3: -10*x1^2*x0"


def test_marked_json_input(capsys, tmp_path):
    from markedschemes.rings import ZZ
    from support import f_j3

    path = tmp_path / "marked.json"
    path.write_text(json.dumps(f_j3(ZZ).to_json()))
    code, out, _ = run(capsys, "reduce", J3, "--vars", "3", "--marked", str(path), "x2^2*x1")
    assert code == 0 and out.strip() == "-10*x1^2*x0 + x1*x0^2"


def test_bad_polynomial(capsys):
    code, _, err = run(capsys, "reduce", J3, "--vars", "3", "--marked", MARKED, "x2^2 + x1")
    assert code == 2 and err.startswith("error:")


def test_stratum_members(capsys):
    code, out, _ = run(capsys, "stratum-members", "x2^4,x2^3*x1,x2^3*x0,x2^2*x1^2,x2^2*x1*x0,x2*x1^3,x2*x1^2*x0", "--vars", "3")
    assert code == 0
    assert "C_{121,040}" in out.split()
