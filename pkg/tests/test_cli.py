"""Command line surface: outputs, determinism, exit codes."""

import json
import os

import pytest

from neroncalc.cli import main

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def fx(name: str) -> str:
    return os.path.join(FIXTURES, name)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_type_II(capsys):
    code, out, _ = run(capsys, "analyze", fx("II.json"))
    assert code == 0
    doc = json.loads(out)
    assert doc["e_model"] == 6
    assert doc["phi"] == []
    assert doc["P"] == "t^2 - t + 1"
    assert doc["additive"] is True


def test_analyze_is_deterministic(capsys):
    _, first, _ = run(capsys, "analyze", fx("I3star.json"))
    _, second, _ = run(capsys, "analyze", fx("I3star.json"))
    assert first == second


def test_analyze_all_fixtures_pass(capsys):
    for name in sorted(os.listdir(FIXTURES)):
        if name.startswith("provider"):
            continue
        code, _, err = run(capsys, "analyze", fx(name))
        assert code == 0, (name, err)


def test_analyze_rejects_invalid_curve(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(
        '{"p": 1, "vertices": [{"id": "a", "N": 2, "g": 0}, '
        '{"id": "b", "N": 2, "g": 0}], "edges": [["a", "b"]]}'
    )
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 1 and "gcd" in err


def test_check_command(capsys):
    code, out, _ = run(capsys, "check", fx("I2.json"), "-d", "3")
    assert code == 0
    assert out.count("PASS") == 3


def test_check_json_mode(capsys):
    code, out, _ = run(capsys, "check", fx("II.json"), "-d", "5", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["pass"] is True
    assert doc["checks"]["component_growth"]["after"] == 1


def test_basechange_command(capsys, tmp_path):
    code, out, _ = run(capsys, "basechange", fx("II.json"), "-d", "5", "--contract")
    assert code == 0
    doc = json.loads(out)
    mults = sorted(v["N"] for v in doc["curve"]["vertices"])
    assert mults == [1, 2, 2, 3, 3, 4, 4, 5, 6]

    target = tmp_path / "out.json"
    code, out, _ = run(
        capsys, "basechange", fx("I2.json"), "-d", "3", "-o", str(target)
    )
    assert code == 0
    written = json.loads(target.read_text())
    assert len(written["vertices"]) == 6
    assert os.path.exists(str(target) + ".trace.json")


def test_basechange_precondition_failure(capsys):
    code, _, err = run(capsys, "basechange", fx("II.json"), "-d", "2")
    assert code == 1 and "gcd" in err


def test_hj_command(capsys):
    code, out, _ = run(capsys, "hj", "--n", "5", "--r", "2")
    assert code == 0
    assert json.loads(out) == {"b": [3, 2]}


def test_resolve_command(capsys):
    code, out, _ = run(capsys, "resolve", "--m1", "6", "--m2", "3", "--d", "5")
    assert json.loads(out) == {"b": [2, 3], "mu": [3, 3, 3, 6], "c": 1}
    code, out, _ = run(capsys, "resolve", "--m1", "2", "--m2", "2", "--d", "2")
    assert json.loads(out) == {"b": [], "mu": [], "c": 2}


def test_series_command(capsys):
    code, out, _ = run(capsys, "series", fx("provider_I0star.json"))
    assert code == 0
    doc = json.loads(out)
    assert doc["pole_order_at_1"] == 1 and doc["degree"] == 0
    assert doc["series"]["den"] == [[0, 2]]


def test_zeta_command(capsys):
    code, out, _ = run(capsys, "zeta", fx("provider_II.json"))
    assert code == 0
    doc = json.loads(out)
    assert doc["pole"] == {"slope": "1/6", "order": 1}
    assert doc["degree"] == 0
    assert doc["euler"]["den"] == [[0, 6]]


def test_elliptic_command(capsys):
    code, out, _ = run(
        capsys, "elliptic", "--type", "II", "--vdelta", "6",
        "--potential", "good", "--p", "2",
    )
    doc = json.loads(out)
    assert doc["c"] == "1/2" and doc["c_tame"] == "1/6" and doc["art"] == -6


def test_genus2_command(capsys):
    code, out, _ = run(
        capsys, "genus2", "--vdmin", "21", "--sigma", "2", "--tau", "0",
        "--deg", "2",
    )
    assert json.loads(out) == {"c": "2"}


def test_json_error_stream(capsys):
    code, out, err = run(capsys, "analyze", "missing-file.json", "--json")
    assert code == 1 and out == ""
    assert json.loads(err)["error"]


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["basechange", fx("II.json")])  # missing -d
    assert exc.value.code == 2
