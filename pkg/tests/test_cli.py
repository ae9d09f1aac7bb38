import json
import os
import subprocess
import sys

import pytest

from octoclif import __version__
from octoclif.checks import VerificationSummary
from octoclif.cli import SCHEMA, RunConfig, emit_report, main, run


def invoke(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("OCTOCLIF_FORMAT", None)
    full_env.pop("OCTOCLIF_OUT", None)
    full_env.update(env or {})
    return subprocess.run([sys.executable, "-m", "octoclif.cli", *args],
                          capture_output=True, text=True, env=full_env)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv("OCTOCLIF_FORMAT", raising=False)
    monkeypatch.delenv("OCTOCLIF_OUT", raising=False)


def test_run_config_defaults_and_pair_rule():
    c = RunConfig("verify")
    assert (c.basis_source, c.convention, c.format) == ("split", "A", "text")
    with pytest.raises(ValueError):
        RunConfig("rotate")
    with pytest.raises(ValueError):
        RunConfig("verify", pair=(1, 2))
    with pytest.raises(ValueError):
        RunConfig("frobnicate")


def test_verify_table1(capsys):
    assert main(["verify", "--suite", "table1"]) == 0
    out = capsys.readouterr().out
    assert "64/64 checks passed" in out


def test_verify_table1_json(capsys):
    assert main(["verify", "--suite", "table1", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    v = doc["verification"]
    assert v["checks_run"] == 64 and v["checks_passed"] == 64
    assert doc["schema"] == SCHEMA and doc["tool_version"] == __version__
    assert doc["basis_source"] == "split" and doc["convention"] == "A"
    assert doc["fixtures"] == ["printed:mult_table"]


def test_rotate_json(capsys):
    assert main(["rotate", "--pair", "1", "2", "--convention", "A", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["rows"]) == 1
    row = doc["rows"][0]
    assert row["pair"] == [1, 2] and row["convention"] == "A"
    assert row["residual_zero"] is True
    assert [m["component"] for m in row["maps"]] == list(range(1, 8))


def test_generators_latex(capsys):
    assert main(["generators", "--basis-source", "split", "--format", "latex"]) == 0
    out = capsys.readouterr().out
    assert out.count("\\begin{bmatrix}") == 7
    assert out.count("\\end{bmatrix}") == 7


def test_generators_json_round_trips():
    from octoclif.matrix import ExactMatrix
    from octoclif.split_octonion import u_matrix
    status, text = run(RunConfig("generators", format="json"))
    doc = json.loads(text)
    assert status == 0
    for g in doc["generators"]:
        assert ExactMatrix.from_json(g["matrix"]) == u_matrix(g["index"])


def test_corrected_source_flags_uncorrectable():
    status, text = run(RunConfig("generators", basis_source="corrected", format="json"))
    assert json.loads(text)["uncorrectable_by_scalar"] == [4]


def test_table2_report():
    status, text = run(RunConfig("table2", format="json"))
    doc = json.loads(text)
    assert status == 0
    assert len(doc["rows"]) == 21
    assert len(doc["diff"]["rows"]) == 21
    assert all(set(r["counts"]) == {"match", "mismatch", "blank_agree"} for r in doc["diff"]["rows"])
    assert "printed:component_table" in doc["fixtures"]


def test_report_has_signature_grid():
    status, text = run(RunConfig("report", format="json"))
    doc = json.loads(text)
    assert status == 0
    eta = doc["signature"]["eta"]
    assert len(eta) == 7 and all(len(r) == 7 for r in eta)
    assert doc["r12"]["matching"] == ["B"]


@pytest.mark.parametrize("fmt", ["text", "json", "csv", "latex"])
@pytest.mark.parametrize("cmd", [["tables"], ["table2"], ["rotate", "--pair", "2", "5"]])
def test_every_format_embeds_provenance(cmd, fmt, capsys):
    assert main(cmd + ["--format", fmt]) == 0
    out = capsys.readouterr().out
    assert __version__ in out
    assert "split" in out


def test_output_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["report", "--format", "json", "--out", str(a)]) == 0
    assert main(["report", "--format", "json", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_env_defaults_and_flag_precedence(tmp_path, monkeypatch, capsys):
    target = tmp_path / "env.json"
    monkeypatch.setenv("OCTOCLIF_FORMAT", "json")
    monkeypatch.setenv("OCTOCLIF_OUT", str(target))
    assert main(["verify", "--suite", "table1"]) == 0
    assert json.loads(target.read_text())["verification"]["checks_run"] == 64
    flag = tmp_path / "flag.txt"
    assert main(["verify", "--suite", "table1", "--format", "text", "--out", str(flag)]) == 0
    assert flag.read_text().startswith("octoclif")


def test_bad_env_format_is_usage_error(monkeypatch):
    monkeypatch.setenv("OCTOCLIF_FORMAT", "yaml")
    assert main(["verify"]) == 2


def test_unwritable_output_exits_1(tmp_path, capsys):
    bad = tmp_path / "missing" / "dir" / "out.txt"
    assert main(["verify", "--suite", "table1", "--out", str(bad)]) == 1
    assert "cannot write" in capsys.readouterr().err


@pytest.mark.parametrize("args", [
    ["frobnicate"], ["verify", "--suite", "nope"], ["rotate"], ["rotate", "--pair", "1", "1"],
    ["rotate", "--pair", "0", "2"], ["verify", "--format", "yaml"], [],
    ["verify", "--pair", "1", "2"],
])
def test_usage_errors_exit_2(args, capsys):
    assert main(args) == 2
    err = capsys.readouterr().err
    assert "usage" in err


def test_internal_failure_exits_1():
    # the printed expansions do not anticommute, so the rotation pipeline on
    # them breaks forced identities
    status, _ = run(RunConfig("verify", suite="rotation", basis_source="fixture"))
    assert status == 1


def test_fixture_mismatches_do_not_fail():
    status, text = run(RunConfig("verify", suite="all", format="json"))
    doc = json.loads(text)
    assert status == 0
    assert doc["verification"]["discrepancies"]
    assert all(d["category"] == "printed-fixture" for d in doc["verification"]["discrepancies"])


def test_emit_report_empty_summary():
    doc = json.loads(emit_report(VerificationSummary("empty"), "json"))
    assert doc["verification"]["checks_run"] == 0
    assert doc["schema"] == SCHEMA
    for fmt in ("text", "csv", "latex"):
        assert emit_report(VerificationSummary("empty"), fmt)


def test_console_entry_point_subprocess():
    p = invoke("verify", "--suite", "table1")
    assert p.returncode == 0 and "64/64" in p.stdout
    p = invoke("bogus")
    assert p.returncode == 2 and "usage" in p.stderr and p.stdout == ""
