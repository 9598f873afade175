"""Command-line behavior: JSON documents, exit codes, determinism."""

import json

import pytest

from frobweight.cli import SCHEMA_VERSION, main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ring_info(capsys):
    code, out, _ = run(capsys, ["ring", "info", "z24"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == SCHEMA_VERSION
    assert doc["size"] == 24
    assert doc["units"] == 8
    assert doc["frobenius"] is True
    assert doc["generating_characters"] == 8


def test_ring_info_from_spec_file(tmp_path, capsys):
    spec = tmp_path / "ring.json"
    spec.write_text('{"kind": "zn", "n": 5}')
    code, out, _ = run(capsys, ["ring", "info", str(spec)])
    assert code == 0
    assert json.loads(out)["units"] == 4


def test_scenario_list(capsys):
    code, out, _ = run(capsys, ["scenario", "--list"])
    assert code == 0
    names = json.loads(out)["scenarios"]
    for expected in ("ex311", "ext-hamming", "rem420", "structural"):
        assert expected in names


def test_unknown_scenario_is_usage_error(capsys):
    code, _, err = run(capsys, ["scenario", "definitely-not-here"])
    assert code == 2
    assert "unknown scenario" in err


def test_refused_computation_exits_one(capsys):
    code, _, err = run(capsys, ["weight", "homog", "f2xy", "--vector", "1"])
    assert code == 1
    assert err.startswith("refused:")


def test_missing_required_weight_argument(capsys):
    code, _, _ = run(capsys, ["weight", "wtn", "z24", "--vector", "0,6"])
    assert code == 2


def test_no_command_is_usage_error(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_unknown_flag_raises_systemexit(capsys):
    with pytest.raises(SystemExit):
        main(["ring", "info", "z4", "--definitely-not-a-flag"])
    capsys.readouterr()


def test_weight_values(capsys):
    code, out, _ = run(capsys, ["weight", "hamming", "z4", "--vector", "1,0,2"])
    assert code == 0
    assert json.loads(out)["value"] == 2
    code, out, _ = run(capsys, ["weight", "homog", "z6", "--vector", "2,3"])
    assert code == 0
    doc = json.loads(out)
    assert doc["coordinate_values"] == ["3/2", "2"]
    assert doc["value"] == "7/2"


def test_scenario_output_deterministic(capsys):
    code1, out1, err1 = run(capsys, ["scenario", "ex311"])
    code2, out2, err2 = run(capsys, ["scenario", "ex311"])
    assert code1 == code2 == 0
    assert out1 == out2
    assert "elapsed" in err1 and "elapsed" in err2
    assert "elapsed" not in out1


def test_json_flag_writes_stdout_document(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, ["scenario", "ex311", "--json", str(target)])
    assert code == 0
    assert target.read_text() == out
    doc = json.loads(target.read_text())
    assert doc["scenario"] == "ex311"
    assert doc["ok"] is True
    assert doc["schema_version"] == SCHEMA_VERSION


def test_dual_partition_round_trip(tmp_path, capsys):
    part = tmp_path / "partition.json"
    part.write_text(json.dumps(
        {"universe": 4, "block_count": 2, "block_of": [0, 1, 1, 1]}
    ))
    code, out, _ = run(capsys, [
        "dual-partition", "z4", "--module", "Rhat", "--n", "1",
        "--source", "module", "--side", "left", "--partition", str(part),
    ])
    assert code == 0
    doc = json.loads(out)
    assert doc["input_block_count"] == 2
    assert doc["dual"]["universe"] == 4
    assert doc["dual"]["block_count"] == 2


def test_orbits_with_identity_matrices(tmp_path, capsys):
    mats = tmp_path / "mats.json"
    mats.write_text(json.dumps({"matrices": [[[1]]]}))
    code, out, _ = run(capsys, [
        "orbits", "z4", "--module", "Rhat", "--n", "1",
        "--matrices", str(mats), "--closed",
    ])
    assert code == 0
    assert json.loads(out)["orbit_count"] == 4


def test_scenario_with_cap_too_small(capsys):
    code, _, err = run(capsys, ["scenario", "ext-hamming", "--cap", "10"])
    assert code == 2
    assert err.startswith("error:")


def test_verify_paper_compact(capsys):
    code, out, err = run(capsys, ["verify-paper", "--jobs", "2"])
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert all(v == {"ok": True} for v in doc["scenarios"].values())
    assert err.count("PASS") == len(doc["scenarios"])
    assert "elapsed" in err
