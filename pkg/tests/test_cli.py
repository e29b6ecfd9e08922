import json
import shutil
import subprocess
import sys

import pytest

from bkn_forge.cli import main


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


GL2 = {"group": {"named": "gl", "n": 2}, "lambda": [1, 0]}


def test_validate_ok_and_fail(tmp_path, capsys):
    code, out, _ = run(["validate", "--input", write(tmp_path, "a.json", GL2)], capsys)
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(["validate", "--format", "json",
                        "--input", write(tmp_path, "b.json", {**GL2, "lambda": [1, 1]})], capsys)
    assert code == 1
    assert json.loads(out)["status"] == "FAIL"


def test_explicit_and_product_groups(tmp_path, capsys):
    explicit = {"group": {"rank": 2, "roots": [[1, -1], [-1, 1]], "coroots": [[1, -1], [-1, 1]]}, "lambda": [2, 0]}
    assert run(["verify-monoid", "--input", write(tmp_path, "e.json", explicit)], capsys)[0] == 0
    prod = {"group": {"product": [{"named": "gl", "n": 2}, {"named": "torus", "n": 1}]}, "lambda": [1, 0, 4]}
    assert run(["build-bkn", "--input", write(tmp_path, "p.json", prod)], capsys)[0] == 0


@pytest.mark.parametrize("payload,where", [
    ("{not json", "a.json:1:2"),
    ({"group": {"named": "gl", "n": 2}}, "missing key 'lambda'"),
    ({"group": {"named": "gl", "n": 2}, "lambda": [1]}, "$.lambda"),
    ({"group": {"rank": 2, "roots": [[1, "x"]], "coroots": [[1, 0]]}, "lambda": [1, 0]}, "$.group.roots[0][1]"),
    ({"group": {"named": "e9", "n": 2}, "lambda": [1, 0]}, "$.group"),
    ({"group": {"named": "gl", "n": 2}, "lambda": [True, 0]}, "$.lambda[0]"),
])
def test_malformed_input_exit_2(tmp_path, capsys, payload, where):
    code, _, err = run(["verify-monoid", "--input", write(tmp_path, "a.json", payload)], capsys)
    assert code == 2
    assert where in err


def test_missing_file_exit_2(tmp_path, capsys):
    code, _, err = run(["validate", "--input", str(tmp_path / "nope.json")], capsys)
    assert code == 2 and "cannot read" in err


def test_invalid_root_datum_fails(tmp_path, capsys):
    bad = {"group": {"rank": 2, "roots": [[1, -1], [-1, 1]], "coroots": [[2, -2], [-2, 2]]}, "lambda": [1, 0]}
    code, out, _ = run(["verify-monoid", "--format", "json", "--input", write(tmp_path, "a.json", bad)], capsys)
    assert code == 1
    checks = json.loads(out)["reports"][0]["checks"]
    assert checks[0]["name"] == "root_datum_valid" and checks[0]["status"] == "FAIL"


def test_example_family_and_out_file(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, stdout, _ = run(["example", "gl2-symn", "--range", "1..3", "--format", "json", "--out", str(out)], capsys)
    assert code == 0 and stdout == ""
    data = json.loads(out.read_text())
    assert [r["name"] for r in data["reports"]] == ["gl2-symn-1", "gl2-symn-2", "gl2-symn-3"]
    assert run(["example", "sp2n", "--n", "9"], capsys)[0] == 2


def test_json_is_deterministic_and_rechecks(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(["example", "gln-sym2", "--format", "json", "--no-timings", "--out", str(a)], capsys)
    run(["example", "gln-sym2", "--format", "json", "--no-timings", "--parallel", "--out", str(b)], capsys)
    assert a.read_bytes() == b.read_bytes()
    code, out, _ = run(["recheck", "--format", "json", "--input", str(a)], capsys)
    assert code == 0
    res = json.loads(out)
    assert res["status"] == "PASS" and all(r["status"] == "PASS" for r in res["results"])


def test_recheck_detects_tampering(tmp_path, capsys):
    a = tmp_path / "a.json"
    run(["example", "gl2-symn", "--n", "2", "--format", "json", "--no-timings", "--out", str(a)], capsys)
    data = json.loads(a.read_text())
    cmp = data["reports"][0]["certificates"]["monoids"]["comparison"]
    cmp["forward"][0]["coefficients"][0] = "7/3"
    code, out, _ = run(["recheck", "--input", write(tmp_path, "t.json", data)], capsys)
    assert code == 1 and "FAIL cone_equality_witnesses" in out


def test_hilbert_flag(tmp_path, capsys):
    code, out, _ = run(["verify-monoid", "--hilbert", "--format", "json",
                        "--input", write(tmp_path, "a.json", {**GL2, "lambda": [2, 0]})], capsys)
    assert code == 0
    hb = json.loads(out)["reports"][0]["certificates"]["monoids"]["hilbert_basis_xi_lambda"]
    assert sorted(map(tuple, hb)) == [(0, -1), (1, 0), (2, 1)]


def test_console_script_subprocess(tmp_path):
    exe = shutil.which("bkn-forge")
    cmd = [exe] if exe else [sys.executable, "-m", "bkn_forge.cli"]
    p = subprocess.run(cmd + ["example", "gln-std", "--n", "2"], capture_output=True, text=True)
    assert p.returncode == 0
    assert "== gln-std-2: PASS" in p.stdout
