import json
import subprocess
import sys

import pytest

from fixtures import sl2
from tpalg import papercheck
from tpalg.catalog import oscillator_automorphism
from tpalg.cli import main
from tpalg.formats import algebra_from_json, algebra_to_json, linear_map_to_json
from tpalg.lie import LieAlgebra


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def osc1(tmp_path, capsys):
    alg, prod = tmp_path / "osc.json", tmp_path / "prod.json"
    assert run(capsys, "catalog", "emit", "--family", "oscillator", "--n", 1, "--lambda", "1", "-o", alg)[0] == 0
    assert run(capsys, "catalog", "emit", "--family", "oscillator", "--n", 1, "--lambda", "1",
               "--params", "1,0,0,0", "-o", prod)[0] == 0
    return alg, prod


def test_reproduction_check_module_four(capsys):
    code, out, _ = run(capsys, "paper-check", "--family", "sl2_module", "--n", 4, "--samples", 1, "--seed", 7)
    assert code == 0
    assert "PASS  sample=0  halfder_dim: expected 1, got 1" in out
    assert "halfder_trivial: trivial=True" in out
    assert out.rstrip().endswith("7/7 checks passed")


def test_tp_verify_oscillator(osc1, capsys):
    alg, prod = osc1
    code, out, _ = run(capsys, "tp", "verify", "--format", "json", alg, prod)
    rep = json.loads(out)
    assert code == 0
    assert (rep["associative"], rep["compatible"], rep["poisson_leibniz"]) == (True, True, False)


def test_tp_poisson_reports_failure_indices(osc1, capsys):
    alg, prod = osc1
    code, out, _ = run(capsys, "tp", "poisson", alg, prod)
    assert code == 1
    assert "poisson_leibniz: false" in out
    assert "leibniz fails at basis indices" in out


def test_derive_on_module_two(tmp_path, capsys):
    path = tmp_path / "m2.json"
    run(capsys, "catalog", "emit", "--family", "sl2_module", "--n", 2, "-o", path)
    code, out, _ = run(capsys, "derive", "--delta", "1/2", path)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "dimension 2"
    assert len(lines) == 3
    assert all(len(json.loads(m)) == 6 for m in lines[1:])


def test_catalog_emit_roundtrip(tmp_path, capsys):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "catalog", "emit", "--family", "s_n2", "--n", 5, "-o", first)
    second.write_text(algebra_to_json(algebra_from_json(first.read_text(encoding="utf-8"))), encoding="utf-8")
    assert second.read_bytes() == first.read_bytes()


def test_identity_transport(tmp_path, osc1, capsys):
    alg, prod = osc1
    code, out, _ = run(capsys, "tp", "transport", alg, _identity_file(tmp_path, 4), prod)
    assert code == 0
    assert json.loads(out)["products"] == json.loads(prod.read_text())["products"]


def _identity_file(tmp_path, n):
    p = tmp_path / "id.json"
    p.write_text(json.dumps({"dim": n, "matrix": [["1" if i == j else "0" for j in range(n)] for i in range(n)]}))
    return p


def _zero_product(tmp_path, n):
    p = tmp_path / "zero.json"
    p.write_text(json.dumps({"name": "z", "dim": n, "products": []}))
    return p


def test_transport_to_minus_gamma(osc1, tmp_path, capsys):
    alg, prod = osc1
    aut = tmp_path / "aut.json"
    aut.write_text(linear_map_to_json(oscillator_automorphism([1], -1, 0, [0], [0], [1], [0])))
    code, out, _ = run(capsys, "tp", "transport", alg, aut, prod)
    assert code == 0
    want = tmp_path / "neg.json"
    run(capsys, "catalog", "emit", "--family", "oscillator", "--n", 1, "--lambda", "1",
        "--params=-1,0,0,0", "-o", want)
    assert json.loads(out)["products"] == json.loads(want.read_text())["products"]


def test_transport_rejects_non_automorphism(tmp_path, capsys):
    alg = tmp_path / "sl2.json"
    alg.write_text(algebra_to_json(sl2()))
    aut = tmp_path / "aut.json"
    aut.write_text(json.dumps({"dim": 3, "matrix": [["2", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}))
    code, _, err = run(capsys, "tp", "transport", alg, aut, _zero_product(tmp_path, 3))
    assert code == 2 and "automorphism" in err


def test_check_jacobi(tmp_path, capsys):
    good, bad = tmp_path / "good.json", tmp_path / "bad.json"
    good.write_text(algebra_to_json(sl2()))
    bad.write_text(algebra_to_json(sl2(he=3)))
    assert run(capsys, "check", "jacobi", good)[0] == 0
    code, out, _ = run(capsys, "check", "jacobi", "--format", "json", bad)
    assert code == 1 and json.loads(out) == {"jacobi": False, "triple": [0, 1, 2]}
    code, _, err = run(capsys, "derive", bad)
    assert code == 2 and "(0, 1, 2)" in err


def test_input_errors_exit_two(tmp_path, capsys):
    dup = tmp_path / "dup.json"
    dup.write_text(json.dumps({"dim": 3, "brackets": [
        {"left": 0, "right": 1, "value": [[2, "1"]]}, {"left": 0, "right": 1, "value": [[2, "1"]]}]}))
    code, _, err = run(capsys, "derive", dup)
    assert code == 2 and "(0, 1)" in err
    assert run(capsys, "derive", tmp_path / "missing.json")[0] == 2
    assert run(capsys, "catalog", "emit", "--family", "oscillator", "--n", 2, "--lambda", "1")[0] == 2
    assert run(capsys, "catalog", "emit", "--family", "sl2_module", "--n", 2, "--params", "1")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["paper-check", "--family", "s_n2", "--n", "5", "--seed", "-1"])
    assert info.value.code == 2


def test_tp_verify_failure_exits_one(tmp_path, capsys):
    alg = tmp_path / "ab.json"
    alg.write_text(algebra_to_json(LieAlgebra(2, {})))
    prod = tmp_path / "p.json"
    prod.write_text(json.dumps({"dim": 2, "products": [
        {"left": 0, "right": 0, "value": [[1, "1"]]}, {"left": 0, "right": 1, "value": [[0, "1"]]}]}))
    code, out, _ = run(capsys, "tp", "verify", alg, prod)
    assert code == 1 and "associativity fails at basis indices" in out


def test_tp_space_and_constraints(tmp_path, capsys):
    alg = tmp_path / "ab.json"
    alg.write_text(algebra_to_json(LieAlgebra(2, {})))
    code, out, _ = run(capsys, "tp", "space", "--format", "json", alg)
    assert code == 0 and json.loads(out)["dimension"] == 6
    code, out, _ = run(capsys, "tp", "space", "--constraints", alg)
    forms = json.loads(out)
    assert code == 0 and forms and all(len(f["Q"]) == 6 for f in forms)


def test_reproduction_check_is_deterministic(capsys):
    argv = ["paper-check", "--family", "oscillator", "--n", 2, "--samples", 3, "--seed", 11, "--format", "json"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0
    other = run(capsys, *argv[:-3], 12, "--format", "json")
    assert other[1] != first[1]


def test_reproduction_check_failure_exits_one(capsys, monkeypatch):
    monkeypatch.setattr(papercheck, "expected_tp_dim", lambda spec: 99)
    code, out, _ = run(capsys, "paper-check", "--family", "s_n2", "--n", 4, "--seed", 1)
    assert code == 1
    assert "first failure: sample=0 tp_space_dim: expected 99, got 1" in out


def test_lambda_flags_go_to_stderr(capsys):
    code, out, err = run(capsys, "catalog", "emit", "--family", "oscillator", "--n", 2, "--lambda", "3,-1")
    assert code == 0 and json.loads(out)["dim"] == 6
    assert "non-positive lambda" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "tpalg", "catalog", "emit", "--family", "heisenberg", "--n", "1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["dim"] == 3

