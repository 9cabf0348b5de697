#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""End-to-end tests for the `sdf-hyperideal` command line."""

import json

import pytest

from sdf_hyperideal_step import serialize_ring
from sdf_hyperideal_step.cli import main, run_command


@pytest.fixture
def z8_path(tmp_path, z8):
    path = tmp_path / "z8.hr"
    path.write_text(serialize_ring(z8))
    return str(path)


def test_sdf(fixture_paths):
    code, report, text = run_command(["sdf", fixture_paths["r1"], "--ideal", "0,2"])
    assert code == 0
    assert text == "sdf-absorbing: true, premise pairs: 1"
    assert report["command"] == "sdf"


def test_weakly_sdf_violation(z8_path):
    code, _, text = run_command(["sdf", z8_path, "--ideal", "0,4", "--weak"])
    assert code == 1
    assert text.splitlines() == [
        "weakly sdf-absorbing: false, premise pairs: 4",
        "witness: (2, 4)",
    ]


def test_classify(fixture_paths):
    code, _, text = run_command(["classify", fixture_paths["r2"], "--ideal", "0"])
    assert code == 0
    lines = text.splitlines()
    for flag in ("weaklySdf=true", "sdf=true", "prime=false", "weaklyPrime=true"):
        assert flag in lines
    assert "radical={0,2}" in lines


def test_json_report(fixture_paths):
    code, report, text = run_command(
        ["sdf", fixture_paths["r2"], "--ideal", "0", "--format", "json"]
    )
    assert code == 0
    data = json.loads(text)
    assert data == json.loads(json.dumps(report, default=list))
    assert sorted(data) == ["command", "diagnostics", "tool", "verdicts", "version"]
    assert data["tool"] == "sdf-hyperideal"
    (verdict,) = data["verdicts"]
    assert verdict["holds"] is True
    assert verdict["premisePairs"] == 1
    assert data["diagnostics"] == []


def test_validate(fixture_paths):
    code, report, text = run_command(["validate", fixture_paths["r1"]])
    assert code == 0
    assert text.splitlines()[0] == "R1: a multiplicative hyperring"
    assert report["verdicts"][0]["identityWitnesses"] == [1, 3]


def test_validate_failure(tmp_path):
    path = tmp_path / "lopsided.hr"
    path.write_text(
        "ring lopsided\norder 2\nzero 0\nadd\n0 1\n1 0\nmul\n{0} {0}\n{1} {1}\nend\n"
    )
    code, report, _ = run_command(["validate", str(path)])
    assert code == 1
    assert "commutative" in report["verdicts"][0]["failed"]


def test_ideals(fixture_paths):
    code, report, text = run_command(["ideals", fixture_paths["r2"]])
    assert code == 0
    assert text.splitlines()[0] == "R2: 3 hyperideals"
    ideals = report["verdicts"][0]["ideals"]
    assert [i["members"] for i in ideals] == [[0], [0, 2], [0, 1, 2, 3]]
    assert [i["prime"] for i in ideals] == [False, True, False]


def test_theorem():
    code, report, text = run_command(["theorem", "T1", "--corpus", "fixtures"])
    assert code == 0
    (verdict,) = report["verdicts"]
    assert verdict["instancesScanned"] == 4
    assert verdict["premisesSatisfied"] == 1
    assert "T1" in text


def test_text_and_json_counts_agree():
    _, report, _ = run_command(["theorem", "T3", "--corpus", "fixtures"])
    _, _, text = run_command(
        ["theorem", "T3", "--corpus", "fixtures", "--format", "json"]
    )
    assert json.loads(text)["verdicts"] == report["verdicts"]


def test_search():
    code, report, text = run_command(["search", "T1", "--family", "fixtures"])
    assert code == 0
    assert report["verdicts"][0]["counterexample"] is None
    assert text == "T1: no counterexample in fixtures"


def test_oracle():
    code, report, _ = run_command(["oracle", "--corpus", "fixtures"])
    assert code == 0
    assert report["verdicts"][0]["disagreements"] == []


def test_malformed_document(tmp_path, r1):
    lines = serialize_ring(r1).splitlines()
    del lines[12]
    path = tmp_path / "short.hr"
    path.write_text("\n".join(lines) + "\n")
    code, report, text = run_command(["sdf", str(path), "--ideal", "0"])
    assert code == 2
    assert text == f"{path}:14:1: 'mul' needs 4 rows, found 3"
    assert report["diagnostics"] == [
        {"line": 14, "column": 1, "message": "'mul' needs 4 rows, found 3"}
    ]


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["sdf"],
        ["theorem", "T99", "--corpus", "fixtures"],
        ["theorem", "T1"],
        ["theorem", "T1", "--corpus", "nonsense"],
        ["sdf", "missing.hr", "--ideal", "0"],
        ["--format", "yaml", "validate"],
    ],
)
def test_input_errors(argv):
    code, report, _ = run_command(argv)
    assert code == 2
    assert report["verdicts"] == []
    assert report["diagnostics"]


def test_not_a_hyperideal(fixture_paths):
    code, _, text = run_command(["sdf", fixture_paths["r1"], "--ideal", "0,1"])
    assert code == 2
    assert text.startswith("error: ")


def test_environment_sets_caps(monkeypatch, fixture_paths):
    monkeypatch.setenv("SDF_HYPERIDEAL_ENUMERATION_CAP", "2")
    code, _, text = run_command(["ideals", fixture_paths["r1"]])
    assert code == 2
    assert "exceeds the cap of 2" in text


def test_config_file_in_working_directory(monkeypatch, tmp_path, fixture_paths):
    (tmp_path / "sdf_hyperideal.ini").write_text(
        "[sdf-hyperideal-step]\nenumeration-cap = 2\n"
    )
    monkeypatch.chdir(tmp_path)
    code, _, _ = run_command(["ideals", fixture_paths["r1"]])
    assert code == 2


def test_main(capsys, fixture_paths):
    assert main(["sdf", fixture_paths["r1"], "--ideal", "0,2"]) == 0
    out, err = capsys.readouterr()
    assert out.strip() == "sdf-absorbing: true, premise pairs: 1"
    assert main(["bogus"]) == 2
    out, err = capsys.readouterr()
    assert err.startswith("usage error")
