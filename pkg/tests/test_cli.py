"""Command-line interface: exit codes, report formats, determinism."""

import json

import pytest
from click.testing import CliRunner

from hni.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def test_build_pass(runner):
    result = runner.invoke(main, ["build", "--n", "1"])
    assert result.exit_code == 0
    assert "pass" in result.output


def test_build_json_payload(runner):
    result = runner.invoke(main, ["build", "--n", "2", "--basis", "named",
                                  "--report", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["command"] == "build"
    assert payload["dimension"] == 16
    assert payload["summary"]["fail"] == 0
    assert payload["labels"][0] == "e0"


def test_usage_errors_exit_two(runner):
    assert runner.invoke(main, ["build", "--n", "0"]).exit_code == 2
    assert runner.invoke(main, ["build", "--n", "3", "--basis", "named"]).exit_code == 2
    assert runner.invoke(main, ["no-such-command"]).exit_code == 2
    assert runner.invoke(main, ["gram", "--rep", "bogus"]).exit_code == 2


def test_table_clean_and_strict(runner):
    assert runner.invoke(main, ["table"]).exit_code == 0
    # the tables match the build exactly, so strict mode stays green
    assert runner.invoke(main, ["table", "--strict-paper"]).exit_code == 0


def test_hopf_check_strict_paper_distinguishes_n(runner):
    assert runner.invoke(main, ["hopf-check", "--n", "1"]).exit_code == 0
    assert runner.invoke(main, ["hopf-check", "--n", "1", "--strict-paper"]).exit_code == 1
    assert runner.invoke(main, ["hopf-check", "--n", "2"]).exit_code == 0
    assert runner.invoke(main, ["hopf-check", "--n", "2", "--strict-paper"]).exit_code == 1


def test_gram_signature_payload(runner):
    result = runner.invoke(main, ["gram", "--n", "1", "--rep", "mu", "--report", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["kernel_dimension"] == 6
    result = runner.invoke(main, ["gram", "--n", "1", "--rep", "lambda",
                                  "--report", "json"])
    payload = json.loads(result.output)
    assert payload["signature"] == {"positive": 2, "negative": 0, "zero": 6}


def test_conjecture_deterministic_output(runner):
    out1 = runner.invoke(main, ["conjecture", "--n-max", "2"])
    out2 = runner.invoke(main, ["conjecture", "--n-max", "2"])
    assert out1.exit_code == 0 and out2.exit_code == 0
    assert out1.output == out2.output
    probe = json.loads(out1.output)
    assert probe["n_max"] == 2


def test_morphisms_seeded_json_is_reproducible(runner):
    args = ["morphisms", "--check", "flip", "--report", "json", "--seed", "5"]
    out1 = runner.invoke(main, args)
    out2 = runner.invoke(main, args)
    assert out1.exit_code == 0
    assert out1.output == out2.output


def test_radical_command(runner):
    result = runner.invoke(main, ["radical", "--n", "1", "--report", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["radical"]["dim_radical"] == 6


def test_out_file_writes_report(runner, tmp_path):
    target = tmp_path / "report.json"
    result = runner.invoke(main, ["build", "--n", "1", "--report", "json",
                                  "--out", str(target)])
    assert result.exit_code == 0
    payload = json.loads(target.read_text())
    assert payload["command"] == "build"
    assert "structure_constants" in payload
