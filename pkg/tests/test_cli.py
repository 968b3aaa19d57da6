import json

import numpy as np
import pytest

from grasscode.cli import main
from grasscode.io import read_code


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_writes_file(tmp_path, capsys):
    path = tmp_path / "pauli1.json"
    code, out, _ = run(capsys, "construct", "pauli", "--k", "1", "-o", str(path))
    assert code == 0
    assert "6 subspaces in G(1,2)" in out
    S = read_code(path)
    assert len(S) == 6


def test_construct_stdout_json(capsys):
    code, out, _ = run(capsys, "construct", "mub", "--p", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["format"] == "grasscode-v1"
    assert len(doc["subspaces"]) == 12


def test_angles_and_verify_bit_stable(tmp_path, capsys):
    path = tmp_path / "mub5.json"
    run(capsys, "construct", "mub", "--p", "5", "-o", str(path))
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "angles", str(path), "--json")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    doc = json.loads(outs[0])
    assert doc["members"] == 30
    assert len(doc["classes"]) == 3
    verifies = []
    for _ in range(2):
        code, out, _ = run(capsys, "verify-design", "--t", "2", str(path))
        assert code == 0
        verifies.append(out)
    assert verifies[0] == verifies[1]
    assert "2-design: true" in verifies[0]


def test_bound_two_distance(capsys):
    code, out, _ = run(capsys, "bound", "two-distance", "--n", "9", "--m", "3",
                       "--alpha", "0", "--beta", "1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == "120"
    assert doc["applicable"] is True


def test_bound_rational_and_decimal_flags(capsys):
    code, out, _ = run(capsys, "bound", "one-distance", "--n", "2", "--m", "1",
                       "--alpha", "1/4", "--json")
    assert code == 0
    assert json.loads(out)["value"] == "3"
    # decimals convert exactly as written
    code, out2, _ = run(capsys, "bound", "one-distance", "--n", "2", "--m", "1",
                        "--alpha", "0.25", "--json")
    assert code == 0
    assert json.loads(out2) == json.loads(out)


def test_bound_simplex_and_design(capsys):
    code, out, _ = run(capsys, "bound", "simplex", "--n", "4", "--m", "2",
                       "--alpha", "14/15")
    assert code == 0 and "N = 16" in out
    code, out, _ = run(capsys, "bound", "simplex", "--n", "4", "--m", "2",
                       "--k", "16", "--json")
    assert code == 0
    assert json.loads(out)["simplex_alpha"] == "14/15"
    code, out, _ = run(capsys, "bound", "design", "--t", "2", "--m", "2",
                       "--n", "4")
    assert code == 0 and "16" in out


def test_table_sweep(capsys):
    for m, n in [(1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7)]:
        code, out, _ = run(capsys, "table", "--n", str(n), "--m", str(m))
        assert code == 0
        for needle in ("absolute |A|=1", "absolute |A|=2", "relative |A|=1",
                       "relative |A|=2", "alpha+beta <=",
                       "alpha+beta - n alpha beta"):
            assert needle in out, (m, n, needle)


def test_table_json_and_csv(tmp_path, capsys):
    code, out, _ = run(capsys, "table", "--n", "4", "--m", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"][0]["value"] == "16"
    csv_path = tmp_path / "t.csv"
    code, _, _ = run(capsys, "table", "--n", "4", "--m", "2",
                     "-o", str(csv_path))
    assert code == 0
    assert csv_path.read_text().splitlines()[0] == "kind,value,applicable,conditions"


def test_dims_output(capsys):
    code, out, _ = run(capsys, "dims", "--n", "4", "--m", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    dims = {d["mu"]: d["dim"] for d in doc["dim_H"]}
    assert dims == {"(1)": 15, "(2)": 84, "(1,1)": 20}
    assert doc["dim_H_k"][-1] == {"k": 2, "dim": 120}


def test_gram_json(tmp_path, capsys):
    path = tmp_path / "m3.json"
    run(capsys, "construct", "mub", "--p", "3", "-o", str(path))
    code, out, _ = run(capsys, "gram", str(path), "--json")
    assert code == 0
    g = np.array(json.loads(out)["gram"])
    assert g.shape == (12, 12)
    assert np.abs(g - g.T).max() == 0.0


def test_check_scheme_json(tmp_path, capsys):
    path = tmp_path / "p2.json"
    run(capsys, "construct", "pauli", "--k", "2", "-o", str(path))
    code, out, _ = run(capsys, "check-scheme", str(path), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["is_scheme"] is True
    assert doc["classes"] == 4
    assert doc["idempotents"]["strength"] == 2


def test_info(tmp_path, capsys):
    path = tmp_path / "m5.json"
    run(capsys, "construct", "mub", "--p", "5", "-o", str(path))
    code, out, _ = run(capsys, "info", str(path))
    assert code == 0
    assert "30 subspaces in G(1,5)" in out


def test_exit_code_validation_error(capsys):
    code, _, err = run(capsys, "bound", "one-distance", "--n", "4", "--m", "2")
    assert code == 1
    assert "alpha" in err


def test_exit_code_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "pauli", "--k", "nope"])
    assert exc.value.code == 1
    capsys.readouterr()


def test_exit_code_numerical_health(tmp_path, capsys):
    path = tmp_path / "p2.json"
    run(capsys, "construct", "pauli", "--k", "2", "-o", str(path))
    code, _, err = run(capsys, "angles", str(path), "--tol", "0.4")
    assert code == 2
    assert "ambiguity" in err


def test_exit_code_size_limit(capsys):
    code, _, err = run(capsys, "construct", "extraspecial", "--p", "3",
                       "--n", "7", "--k", "1")
    assert code == 3
    assert "exceeds" in err


def test_missing_file_is_validation_error(capsys):
    code, _, err = run(capsys, "info", "/nonexistent/code.json")
    assert code == 1


def test_output_file_option(tmp_path, capsys):
    path = tmp_path / "m3.json"
    run(capsys, "construct", "mub", "--p", "3", "-o", str(path))
    out_path = tmp_path / "angles.txt"
    code, _, _ = run(capsys, "angles", str(path), "-o", str(out_path))
    assert code == 0
    assert "12 subspaces in G(1,3)" in out_path.read_text()


def test_threads_flag_is_accepted_and_deterministic(tmp_path, capsys):
    path = tmp_path / "m5.json"
    run(capsys, "construct", "mub", "--p", "5", "-o", str(path))
    outs = []
    for th in ("1", "4"):
        code, out, _ = run(capsys, "angles", str(path), "--threads", th,
                           "--json")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
