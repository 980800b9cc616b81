import json

import pytest

from ccx.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_complex_b2(capsys):
    code, out, err = run_cli(capsys, "complex", "--type", "B2", "-m", "3")
    assert code == 0
    data = json.loads(out)
    assert data["f_vector"] == [1, 14, 28]
    assert data["audit_pure"] and data["audit_ridge_degree"]


def test_complex_facets(capsys):
    code, out, _ = run_cli(capsys, "complex", "--type", "A2", "-m", "2", "--facets")
    data = json.loads(out)
    assert len(data["facets"]) == 12


def test_complex_rejects_affine(capsys):
    code, out, err = run_cli(
        capsys, "complex", "--diagram", "n=3;1-2:3 1-3:3 2-3:3", "-m", "1"
    )
    assert code == 1
    assert json.loads(err)["error"] == "not-finite-type"


def test_complex_budget(capsys, monkeypatch):
    monkeypatch.setenv("CCX_BUDGET", "4")
    code, out, err = run_cli(capsys, "complex", "--type", "A2", "-m", "1")
    assert code == 1
    assert json.loads(err)["error"] == "budget"


def test_fvector_csv(capsys):
    code, out, _ = run_cli(capsys, "fvector", "--type", "B2", "-m", "3", "--emit", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "type,n,m,k,f_k,h_k"
    assert lines[1] == "B2,2,3,0,1,1"
    assert lines[-1] == "B2,2,3,2,28,15"


def test_hvector_json(capsys):
    code, out, _ = run_cli(capsys, "hvector", "--type", "A2", "-m", "1")
    data = json.loads(out)
    assert data["h_vector"] == ["1", "3", "1"]


def test_invariants_h4(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--type", "H4")
    data = json.loads(out)
    assert data["consensus"] == "agree"
    for res in data["methods"].values():
        assert res["status"] == "ok"
        assert res["h"] == "30"
        assert res["exponents"] == ["1", "11", "19", "29"]


def test_invariants_affine_a3(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--diagram", "~A3")
    data = json.loads(out)
    for res in data["methods"].values():
        assert res["h"] == "8"
        assert res["exponents"] == ["1", "3", "5", "7"]


def test_invariants_k4_fails(capsys):
    code, out, _ = run_cli(
        capsys,
        "invariants",
        "--diagram",
        "n=4;1-2:3 2-3:3 3-4:3 1-4:3 1-3:3 2-4:3",
    )
    data = json.loads(out)
    assert code == 0
    statuses = {res["status"] for res in data["methods"].values()}
    assert statuses == {"zero-denominator"}


def test_invariants_single_method(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--type", "B3", "--method", "mg")
    data = json.loads(out)
    assert list(data["methods"]) == ["mg"]
    assert data["methods"]["mg"]["M"] == "3"


def test_dissect_a(capsys):
    code, out, _ = run_cli(capsys, "dissect", "--family", "A", "-n", "2", "-m", "2")
    data = json.loads(out)
    assert data["allowable_diagonals"] == 8
    assert data["noncrossing_subset_counts"] == [1, 8, 12]


def test_dissect_svg(capsys):
    code, out, _ = run_cli(
        capsys, "dissect", "--family", "D", "-n", "3", "-m", "2", "--emit", "svg"
    )
    assert code == 0
    assert out.startswith("<svg")


def test_dissect_b_counts(capsys):
    code, out, _ = run_cli(capsys, "dissect", "--family", "B", "-n", "2", "-m", "2")
    data = json.loads(out)
    assert data["facet_count"] == 15


def test_verify_small(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "models", "--max-rank", "3", "--max-m", "1"
    )
    assert code == 0
    assert "checks passed" in out.strip().splitlines()[-1]
    assert "FAIL" not in out


def test_outputs_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "invariants", "--type", "F4")
    _, out2, _ = run_cli(capsys, "invariants", "--type", "F4")
    assert out1 == out2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["complex"])  # missing -m
    assert exc.value.code == 2


def test_missing_diagram_is_domain_error(capsys):
    code, out, err = run_cli(capsys, "complex", "-m", "1")
    assert code == 1
    assert json.loads(err)["error"] == "usage"
