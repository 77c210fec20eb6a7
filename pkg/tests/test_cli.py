"""Command-line interface tests.

The CLI is driven in process through main(argv); stdout is captured with
capsys and parsed back as JSON. One subprocess test covers the module
entry point. Expected polynomial strings come from values derived by
hand in the lower-level test modules.
"""

import json
import subprocess
import sys

import pytest

from symcart import cli
from symcart.exactalg import MultiPoly

CATALOG_NAMES = ["sl2-so2", "sl3-so21", "abelian2", "sl2-diagonal"]

# sl(2) split by the off-diagonal involution, same algebra as the
# "sl2-so2" catalog entry but loaded from a definition document
SL2_DOC = {
    "name": "sl2-json",
    "dim": 3,
    "brackets": [[0, 1, 2, "-2"], [0, 2, 1, "2"], [1, 2, 0, "2"]],
    "sigma": [["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "-1"]],
    "cartan": [["0", "1", "0"]],
}

# compact-type fixture whose a-spectrum is +-i*sqrt(2), outside Q(i)
TWISTED_DOC = {
    "name": "so3-twisted",
    "dim": 3,
    "brackets": [[0, 1, 2, "1"], [1, 2, 0, "2"], [2, 0, 1, "1"]],
    "sigma": [["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "-1"]],
    "cartan": [["0", "1", "0"]],
}


def run(argv, capsys):
    code = cli.main(argv)
    return code, capsys.readouterr().out


def run_json(argv, capsys):
    code, out = run(argv, capsys)
    return code, json.loads(out)


def check_map(report):
    return {c["name"]: c for c in report["checks"]}


def test_catalog_lists_all_pairs(capsys):
    code, report = run_json(["catalog"], capsys)
    assert code == 0
    entries = report["results"]["pairs"]
    assert [e["name"] for e in entries] == CATALOG_NAMES
    by_name = {e["name"]: e for e in entries}
    assert by_name["sl3-so21"]["dim"] == 8
    assert by_name["sl3-so21"]["rank"] == 2
    assert by_name["sl2-so2"]["h_dim"] == 1
    assert by_name["sl2-so2"]["q_dim"] == 2


def test_phi_sl2_values(capsys):
    code, report = run_json(["phi", "--pair", "sl2-so2"], capsys)
    assert code == 0
    res = report["results"]
    assert res["phi"] == "(-4)*x0^2"
    assert res["gram_constant"] == "-1/2"
    assert all(c["passed"] for c in report["checks"])


def test_phi_sl3_matches_expected_polynomial(capsys):
    code, report = run_json(["phi", "--pair", "sl3-so21"], capsys)
    assert code == 0
    got = MultiPoly.parse(report["results"]["phi"], 2)
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    assert got == x**4 * y**2 * 324 + x**2 * y**4 * 72 + y**6 * 4


def test_roots_sl3(capsys):
    code, report = run_json(["roots", "--pair", "sl3-so21"], capsys)
    assert code == 0
    res = report["results"]
    assert len(res["roots"]) == 6
    assert all(r["multiplicity"] == 1 for r in res["roots"])
    assert all(r["is_reduced"] for r in res["roots"])
    assert res["zero_dim"] == 2
    assert res["dim_g"] == 8
    assert check_map(report)["root_bookkeeping"]["passed"]


def test_weyl_sl2(capsys):
    code, report = run_json(["weyl", "--pair", "sl2-so2"], capsys)
    assert code == 0
    res = report["results"]
    assert res["order"] == 2
    assert [["-1"]] in res["elements"]
    assert [["1"]] in res["elements"]
    assert check_map(report)["weyl_permutes_roots"]["passed"]


def test_generators_sl3(capsys):
    code, report = run_json(["generators", "--pair", "sl3-so21"], capsys)
    assert code == 0
    res = report["results"]
    assert res["degrees"] == [2, 3]
    assert len(res["generators"]) == 2
    assert check_map(report)["degrees_product"]["passed"]


def test_decompose_euler_field_sl2(capsys):
    code, report = run_json(
        ["decompose", "--pair", "sl2-so2", "--field", '["x0"]'], capsys
    )
    assert code == 0
    assert report["results"]["coefficients"] == ["(1)"]
    assert check_map(report)["reconstruction_exact"]["passed"]


def test_decompose_rejects_noninvariant_field(capsys):
    code, report = run_json(
        ["decompose", "--pair", "sl3-so21", "--field", '["x0", "0"]'], capsys
    )
    assert code == 3
    assert "invariant" in report["error"]["message"]


def test_lift_constant_is_not_liftable(capsys):
    code, report = run_json(
        ["lift", "--pair", "sl2-so2", "--derivation", "[1]"], capsys
    )
    assert code == 2
    res = report["results"]
    assert res["liftable"] is False
    assert res["stable"] is False
    lift_check = check_map(report)["liftable"]
    assert not lift_check["passed"]
    assert lift_check["witness"]["remainder"] == "(-2)"
    assert lift_check["witness"]["index"] == 0
    # failure mode agreement still holds
    assert check_map(report)["stability_matches_liftability"]["passed"]


def test_lift_generator_image(capsys):
    code, report = run_json(
        ["lift", "--pair", "sl2-so2", "--derivation", '["x0^2"]'], capsys
    )
    assert code == 0
    res = report["results"]
    assert res["liftable"] is True
    assert res["coefficients"] == ["(1/2)"]
    assert all(c["passed"] for c in report["checks"])


def test_slice_origin_abelian2(capsys):
    code, report = run_json(
        ["slice", "--pair", "abelian2", "--point", '["0", "0"]'], capsys
    )
    assert code == 0
    res = report["results"]
    assert res["psi"] == "(1)"
    assert len(res["local_generators"]) == 2
    assert all(c["passed"] for c in report["checks"])


def test_slice_sl3_subregular(capsys):
    code, report = run_json(
        ["slice", "--pair", "sl3-so21", "--point", '["1", "0"]'], capsys
    )
    assert code == 0
    res = report["results"]
    assert res["psi_at_point"] != "0"
    assert res["transition_det_at_point"] != "0"
    cm = check_map(report)
    for name in (
        "factorization_exact",
        "local_value_nonzero",
        "transition_reconstructs",
        "transition_det_nonzero",
    ):
        assert cm[name]["passed"]


def test_verify_abelian2_all_pass(capsys):
    code, report = run_json(["verify", "--pair", "abelian2"], capsys)
    assert code == 0
    assert report["results"]["phi"] == "(1)"
    assert report["checks"]
    assert all(c["passed"] for c in report["checks"])


def test_verify_example93_report(capsys):
    code, report = run_json(["verify", "--example93"], capsys)
    assert code == 0
    names = [c["name"] for c in report["checks"]]
    assert names == [
        "dimensions",
        "cartan_subspace",
        "centralizer_witnesses",
        "fixed_centralizer_space",
        "orthogonality",
        "gradient_rank",
    ]
    assert all(c["passed"] for c in report["checks"])
    assert report["results"]["all_passed"] is True


def test_verify_whole_catalog(capsys, monkeypatch):
    # shrink the sampled checks so the aggregate run stays fast
    monkeypatch.setattr(
        cli,
        "_VERIFY_SAMPLES",
        {
            "fields": 2,
            "field_degree": 4,
            "derivations": 2,
            "derivation_degree": 3,
            "jets": 2,
            "jet_actions": 2,
        },
    )
    code, report = run_json(["verify"], capsys)
    assert code == 0
    names = [c["name"] for c in report["checks"]]
    for pair in CATALOG_NAMES:
        assert any(n.startswith(pair + ":") for n in names)
    assert any(n.startswith("example93:") for n in names)
    assert any("control" in n for n in names)
    assert all(c["passed"] for c in report["checks"])


def test_unknown_pair_is_input_error(capsys):
    code, report = run_json(["phi", "--pair", "nope"], capsys)
    assert code == 3
    assert "nope" in report["error"]["message"]


def test_missing_pair_is_input_error(capsys):
    code, report = run_json(["phi"], capsys)
    assert code == 3
    assert "pair" in report["error"]["message"]


def test_conflicting_pair_sources(capsys, tmp_path):
    doc = tmp_path / "p.json"
    doc.write_text(json.dumps(SL2_DOC))
    code, report = run_json(
        ["phi", "--pair", "sl2-so2", "--pair-file", str(doc)], capsys
    )
    assert code == 3


def test_pair_file_phi(capsys, tmp_path):
    doc = tmp_path / "sl2.json"
    doc.write_text(json.dumps(SL2_DOC))
    code, report = run_json(["phi", "--pair-file", str(doc)], capsys)
    assert code == 0
    assert report["results"]["phi"] == "(-4)*x0^2"


def test_pair_file_unsupported_spectrum(capsys, tmp_path):
    doc = tmp_path / "twisted.json"
    doc.write_text(json.dumps(TWISTED_DOC))
    code, report = run_json(["roots", "--pair-file", str(doc)], capsys)
    assert code == 4
    assert "unsupported" in report["error"]["message"]


def test_malformed_inputs_are_input_errors(capsys, tmp_path):
    for argv in (
        ["lift", "--pair", "sl2-so2", "--derivation", "not json"],
        ["lift", "--pair", "sl2-so2", "--derivation", '{"a": 1}'],
        ["lift", "--pair", "sl2-so2", "--derivation", '["x0^"]'],
        ["lift", "--pair", "sl2-so2", "--derivation", '["x0", "x0"]'],
        ["lift", "--pair", "sl2-so2", "--derivation", '["x1"]'],
        ["decompose", "--pair", "sl2-so2", "--field", "[[1]]"],
        ["slice", "--pair", "sl2-so2", "--point", '["1", "2"]'],
        ["slice", "--pair", "sl2-so2", "--point", '["q"]'],
    ):
        code, report = run_json(argv, capsys)
        assert code == 3, argv
        assert "error" in report, argv
    missing = tmp_path / "absent.json"
    code, report = run_json(["phi", "--pair-file", str(missing)], capsys)
    assert code == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, report = run_json(["phi", "--pair-file", str(bad)], capsys)
    assert code == 3


def test_output_is_byte_identical_across_runs(capsys):
    _, first = run(["verify", "--pair", "sl2-so2", "--seed", "5"], capsys)
    _, second = run(["verify", "--pair", "sl2-so2", "--seed", "5"], capsys)
    assert first == second
    _, third = run(["phi", "--pair", "sl3-so21"], capsys)
    _, fourth = run(["phi", "--pair", "sl3-so21"], capsys)
    assert third == fourth


def test_pretty_output_parses_to_same_object(capsys):
    _, compact = run(["generators", "--pair", "sl2-so2"], capsys)
    _, pretty = run(["generators", "--pair", "sl2-so2", "--pretty"], capsys)
    assert pretty != compact
    assert "\n" in pretty.strip()
    assert json.loads(pretty) == json.loads(compact)


def test_report_echoes_command_and_inputs(capsys):
    _, report = run_json(
        ["lift", "--pair", "sl2-so2", "--derivation", '["x0^2"]', "--seed", "7"],
        capsys,
    )
    assert report["command"] == "lift"
    assert report["inputs"]["pair"] == "sl2-so2"
    assert report["inputs"]["seed"] == 7
    assert report["inputs"]["derivation"] == ["x0^2"]


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "symcart.cli", "catalog"],
        capture_output=True,
        text=True,
        cwd=str(tmp_path),
    )
    assert proc.returncode == 0
    parsed = json.loads(proc.stdout)
    assert [e["name"] for e in parsed["results"]["pairs"]] == CATALOG_NAMES
