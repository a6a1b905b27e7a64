"""End-to-end tests for the command-line interface.

Every test drives :func:`wbext.cli.main` directly with an argv list and
inspects the return code plus captured stdout/stderr, the same contract a
shell user sees: 0 success, 1 mathematical mismatch, 2 usage error.
"""

import json
from fractions import Fraction

import pytest

from wbext.cli import main
from wbext.problems import Caps, ExtProblem
from wbext.records import parse_record

SOLVE_T1 = ["solve", "--type", "1", "--b", "1", "--alpha", "0", "--gamma", "0", "--delta", "1"]
SOLVE_T3 = [
    "solve", "--type", "3", "--b", "2",
    "--alpha", "0", "--abar", "0", "--delta", "3", "--dbar", "1",
]


def run(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_solve_table_output(capsys):
    rc, out, err = run(capsys, SOLVE_T1)
    assert rc == 0
    assert err == ""
    assert "ext_dim         2" in out
    assert "shape           1" in out
    assert "basis:" in out
    assert "[0] f = " in out


def test_solve_json_round_trips(capsys):
    rc, out, _ = run(capsys, SOLVE_T3 + ["--json"])
    assert rc == 0
    doc = json.loads(out)
    assert doc["ext_dim"] == 2
    record = parse_record(out)
    assert record.problem == ExtProblem(
        shape=3, b=2, alpha=0, abar=0, delta=3, dbar=1, caps=Caps()
    )
    assert len(record.basis) == doc["ext_dim"]


def test_solve_json_and_table_agree(capsys):
    _, table, _ = run(capsys, SOLVE_T1)
    _, machine, _ = run(capsys, SOLVE_T1 + ["--json"])
    doc = json.loads(machine)
    assert f"ext_dim         {doc['ext_dim']}" in table
    for entry in doc["basis"]:
        assert entry["f"] in table


def test_missing_required_parameter_is_a_usage_error(capsys):
    rc, out, err = run(capsys, ["solve", "--type", "1", "--b", "1", "--alpha", "0", "--gamma", "0"])
    assert rc == 2
    assert out == ""
    assert "requires --delta" in err


def test_forbidden_parameter_is_a_usage_error(capsys):
    rc, _, err = run(capsys, SOLVE_T1 + ["--dbar", "1"])
    assert rc == 2
    assert "does not take --dbar" in err
    rc, _, err = run(capsys, SOLVE_T3 + ["--gamma", "0"])
    assert rc == 2
    assert "does not take --gamma" in err


def test_floats_are_rejected_by_the_flag_parser(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--type", "1", "--b", "1.5", "--alpha", "0", "--gamma", "0", "--delta", "1"])
    assert exc.value.code == 2


def test_zero_b_is_a_usage_error(capsys):
    rc, _, err = run(capsys, ["solve", "--type", "1", "--b", "0", "--alpha", "0", "--gamma", "0", "--delta", "1"])
    assert rc == 2
    assert "error:" in err


def test_negative_rational_option_values_parse(capsys):
    # ``-2/3`` must be treated as a value for --b, not mistaken for a flag.
    rc, out, _ = run(
        capsys,
        ["scan", "--b", "-2/3", "--sector", "g", "--promote", "dbar", "--diff", "4/3"],
    )
    assert rc == 0
    assert "line diff=4/3" in out
    assert "t=-1/3" in out


def test_scan_single_line_text(capsys):
    rc, out, _ = run(capsys, ["scan", "--b", "1", "--sector", "g", "--diff", "2"])
    assert rc == 0
    assert "scan b=1 sector=g promote=dbar" in out
    assert "family g = d - t*l" in out
    assert "generic_dim 1" in out


def test_scan_json_schema(capsys):
    rc, out, _ = run(
        capsys,
        ["scan", "--b", "2", "--sector", "g", "--promote", "dbar", "--diff", "3", "--json"],
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["b"] == "2" and doc["sector"] == "g" and doc["promote"] == "dbar"
    assert doc["t_role"] == "sub-module weight"
    (line,) = doc["lines"]
    assert set(line) == {"diff", "generic_dim", "family_g", "certificate", "specials", "notes"}
    assert line["diff"] == "3"
    assert line["family_g"] is not None
    for special in line["specials"]:
        assert set(special) == {"t", "delta", "dbar", "ext_dim"}
        assert Fraction(special["delta"]) - Fraction(special["dbar"]) == 3


def test_scan_delta_promotion_labels_t(capsys):
    rc, out, _ = run(
        capsys, ["scan", "--b", "2", "--sector", "f", "--promote", "delta", "--diff", "2"]
    )
    assert rc == 0
    assert "(t is the quotient weight)" in out


def test_caps_environment_variable(capsys, monkeypatch):
    monkeypatch.setenv("WB_EXT_CAPS", "9,6,9,9")
    rc, out, _ = run(capsys, SOLVE_T1 + ["--json"])
    assert rc == 0
    assert json.loads(out)["diagnostics"]["caps"] == [9, 6, 9, 9]


def test_caps_flags_override_environment(capsys, monkeypatch):
    monkeypatch.setenv("WB_EXT_CAPS", "9,6,9,9")
    rc, out, _ = run(capsys, SOLVE_T1 + ["--json", "--cap-f", "10"])
    assert rc == 0
    assert json.loads(out)["diagnostics"]["caps"] == [10, 6, 9, 9]


def test_malformed_caps_environment_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("WB_EXT_CAPS", "1,2,3")
    rc, _, err = run(capsys, SOLVE_T1)
    assert rc == 2
    assert "WB_EXT_CAPS" in err

    monkeypatch.setenv("WB_EXT_CAPS", "a,b,c,d")
    rc, _, err = run(capsys, SOLVE_T1)
    assert rc == 2
    assert "WB_EXT_CAPS" in err


def test_replay_suite_passes(capsys):
    rc, out, _ = run(capsys, ["replay", "--table", "theo2"])
    assert rc == 0
    assert "summary: 1/1 passed" in out


def test_replay_rejects_unknown_table(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["replay", "--table", "bogus"])
    assert exc.value.code == 2


def test_check_axioms_bracket_only(capsys):
    rc, out, _ = run(capsys, ["check-axioms", "--b", "3"])
    assert rc == 0
    assert "bracket table (b = 3)" in out
    assert "free module" not in out


def test_check_axioms_with_module(capsys):
    rc, out, _ = run(capsys, ["check-axioms", "--b", "-2/3", "--alpha", "1", "--delta", "5/3"])
    assert rc == 0
    assert "free module (alpha = 1, delta = 5/3)" in out


def test_check_axioms_needs_both_module_parameters(capsys):
    rc, _, err = run(capsys, ["check-axioms", "--b", "2", "--alpha", "1"])
    assert rc == 2
    assert "--alpha and --delta must be given together" in err


def test_out_flag_writes_file_instead_of_stdout(capsys, tmp_path):
    target = tmp_path / "result.json"
    rc, out, _ = run(capsys, SOLVE_T1 + ["--json", "--out", str(target)])
    assert rc == 0
    assert out == ""
    doc = json.loads(target.read_text())
    assert doc["ext_dim"] == 2


def test_verify_accepts_solver_output(capsys, tmp_path):
    target = tmp_path / "result.json"
    main(SOLVE_T3 + ["--json", "--out", str(target)])
    capsys.readouterr()
    rc, out, _ = run(capsys, ["verify", "--input", str(target)])
    assert rc == 0
    assert "2/2 witness(es) verified" in out


def test_verify_flags_tampered_witness(capsys, tmp_path):
    target = tmp_path / "result.json"
    main(SOLVE_T3 + ["--json", "--out", str(target)])
    capsys.readouterr()
    doc = json.loads(target.read_text())
    doc["basis"][0]["f"] = "l^7"
    target.write_text(json.dumps(doc))
    rc, out, _ = run(capsys, ["verify", "--input", str(target)])
    assert rc == 1
    assert "FAIL" in out
    assert "residual" in out
    assert "1/2 witness(es) verified" in out


def test_verify_empty_basis_is_fine(capsys, tmp_path):
    target = tmp_path / "result.json"
    main(SOLVE_T3 + ["--json", "--out", str(target)])
    capsys.readouterr()
    doc = json.loads(target.read_text())
    doc["basis"] = []
    target.write_text(json.dumps(doc))
    rc, out, _ = run(capsys, ["verify", "--input", str(target)])
    assert rc == 0
    assert "no witnesses listed" in out


def test_verify_malformed_document_is_a_usage_error(capsys, tmp_path):
    target = tmp_path / "broken.json"
    target.write_text("{not json")
    rc, _, err = run(capsys, ["verify", "--input", str(target)])
    assert rc == 2
    assert "error:" in err

    target.write_text(json.dumps({"problem": {"shape": 1, "b": "x"}}))
    rc, _, err = run(capsys, ["verify", "--input", str(target)])
    assert rc == 2
    assert "problem.b" in err


def test_verify_missing_file_is_a_usage_error(capsys, tmp_path):
    rc, _, err = run(capsys, ["verify", "--input", str(tmp_path / "absent.json")])
    assert rc == 2
    assert "cannot read --input" in err


def test_output_is_byte_deterministic(capsys):
    outputs = []
    for _ in range(2):
        rc, out, _ = run(capsys, SOLVE_T3 + ["--json"])
        assert rc == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]
    scans = []
    for _ in range(2):
        rc, out, _ = run(capsys, ["scan", "--b", "1", "--sector", "g", "--diff", "2", "--json"])
        assert rc == 0
        scans.append(out)
    assert scans[0] == scans[1]
