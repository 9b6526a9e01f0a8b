import json
import subprocess
import sys

import pytest

from innerlie import matrices as M, operators as O
from innerlie.cli import main
from innerlie.scalars import GaussRational as G
from innerlie.serialize import (generators_from_json, matrix_from_json,
                                matrix_to_json, operator_from_json,
                                operator_to_json)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_matrix_round_trip():
    m = M.unit(3, 1, 2) + G(1, 1) * M.unit(3, 2, 2) - 2 * M.identity(3)
    assert matrix_from_json(matrix_to_json(m)) == m


def test_operator_terms():
    n = 2
    one = [["1", "0"], ["0", "1"]]
    e12 = [["0", "1"], ["0", "0"]]
    t = operator_from_json({"tensor": [e12, one]}, n)
    assert t == O.tensor(M.unit(n, 1, 2), M.identity(n))
    d = operator_from_json({"ad": e12}, n)
    assert d == O.inner_deriv(M.unit(n, 1, 2))
    s = operator_from_json({"sum": [{"ad": e12}, {"scale": ["2", {"t": ["1", "1"]}]}]}, n)
    assert s == O.inner_deriv(M.unit(n, 1, 2)) + 2 * O.identity_op(n)
    dense = operator_to_json(s)
    assert operator_from_json(dense, n) == s
    with pytest.raises(ValueError):
        operator_from_json({"nope": []}, n)


def test_generator_expansion():
    gens = generators_from_json(["g", {"W": "1"}], 3)
    assert len(gens) == 16
    gens = generators_from_json([{"so2": True}], 2)
    assert len(gens) == 6


def test_cli_catalog(capsys):
    code, out = run_cli(capsys, "catalog", "V5", "--n", "3")
    assert code == 0
    assert out["dim"] == 27 and out["hwv_check"] and out["g_stable"]
    assert not out["certified"]


def test_cli_catalog_bad_name(capsys):
    with pytest.raises(SystemExit):
        main(["catalog", "nope", "--n", "3"])


def test_cli_closure(capsys, tmp_path):
    p = tmp_path / "gens.json"
    p.write_text(json.dumps([{"tensor": [[["1", "0"], ["0", "1"]],
                                          [["1", "0"], ["0", "1"]]]}]))
    code, out = run_cli(capsys, "closure", "--kind", "assoc", "--n", "2",
                        "--gens", str(p), "--emit-basis")
    assert code == 0
    assert out["dim"] == 1 and len(out["basis"]) == 1


def test_cli_classify(capsys, tmp_path):
    p = tmp_path / "gens.json"
    p.write_text(json.dumps([{"so2": True}]))
    code, out = run_cli(capsys, "classify", "--n", "5", "--gens", str(p))
    assert code == 0
    assert out["kind"] == "SO_CONJ" and out["t_ratio"] == "1"
    assert out["dim"] == 300 and out["certified"]


def test_cli_classify_missing_g(capsys, tmp_path):
    p = tmp_path / "gens.json"
    p.write_text(json.dumps(["p"]))
    code, _ = run_cli(capsys, "classify", "--n", "5", "--gens", str(p))
    assert code == 1


def test_cli_classify_parse_error(tmp_path):
    p = tmp_path / "gens.json"
    p.write_text("{not json")
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--n", "5", "--gens", str(p)])
    assert exc.value.code == 2


def test_cli_rank(capsys):
    code, out = run_cli(capsys, "rank", "--n", "5", "--wlambda", "1",
                        "--samples", "10", "--seed", "1")
    assert code == 0
    assert out["passed"] and out["min_rank_seen"] >= 3


def test_cli_verify_density(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "density", "--n", "5")
    assert code == 0 and out["passed"]


def test_cli_entry_point_subprocess():
    out = subprocess.run(
        [sys.executable, "-m", "innerlie.cli", "catalog", "g", "--n", "2"],
        capture_output=True, text=True)
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["dim"] == 3 and not data["certified"]


def test_cli_output_determinism(capsys, tmp_path):
    p = tmp_path / "gens.json"
    p.write_text(json.dumps([{"W": "1"}, "g"]))
    outs = []
    for _ in range(2):
        code = main(["classify", "--n", "5", "--gens", str(p)])
        assert code == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
