from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from cyclichom.cli import EXIT_CHECK_FAILED, EXIT_GUARDRAIL, EXIT_INPUT, cli, run


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _records(output: str):
    return [json.loads(line) for line in output.splitlines() if line.startswith("{")]


def test_un_prints_signed_coefficients(runner):
    result = runner.invoke(cli, ["un", "--n", "1"])
    assert result.exit_code == 0, result.output
    assert "coefficients (-2, 1, 1) slots (y1, z1, y0)" in result.output


def test_un_two(runner):
    result = runner.invoke(cli, ["un", "--n", "2"])
    assert "coefficients (12, -6, -2, 1, 1) slots (y2, z2, y1, z1, y0)" in result.output


def test_un_over_prime_field(runner):
    result = runner.invoke(cli, ["--field", "fp:5", "un", "--n", "1"])
    assert "coefficients (3, 1, 1)" in result.output


def test_hc_of_bundled_ground_field(runner):
    result = runner.invoke(cli, ["hc", "examples/ground_field.yaml", "--n", "4"])
    assert result.exit_code == 0, result.output
    assert "dim 1" in result.output


def test_hh_zero_of_commutative_algebra(runner):
    result = runner.invoke(cli, ["hh", "dual_numbers", "--n", "0"])
    assert result.exit_code == 0
    assert "dim 2" in result.output


def test_structured_output_is_stable(runner):
    args = ["--format", "structured", "hc", "dual_numbers", "--n", "2"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    records = _records(first.output)
    assert records[0]["record"] == "version"
    assert records[1]["record"] == "homology"
    assert records[1]["group"] == "HC"
    assert records == _records(second.output)


def test_chern_of_unit_over_ground_field(runner):
    result = runner.invoke(cli, ["chern", "k", "--idempotent", "unit", "--n", "1"])
    assert result.exit_code == 0, result.output
    assert "psi = 1" in result.output


def test_chern_of_matrix_unit(runner):
    result = runner.invoke(cli, ["chern", "k", "--idempotent", "E11:2", "--n", "2"])
    assert "psi = 1" in result.output


def test_chern_over_literal_document_has_no_psi(runner):
    result = runner.invoke(cli, ["chern", "examples/ground_field.yaml", "--idempotent", "unit", "--n", "1"])
    assert result.exit_code == 0, result.output
    assert "class in HC_2" in result.output
    assert "psi =" not in result.output
    help_text = " ".join(runner.invoke(cli, ["chern", "--help"]).output.split())
    assert "printed only for the built-in ground field" in help_text


def test_smap_over_ground_field(runner):
    result = runner.invoke(cli, ["smap", "k", "--n", "1"])
    assert result.exit_code == 0
    assert "1x1" in result.output


def test_hc_minus_window(runner):
    result = runner.invoke(cli, ["hc", "k", "--minus", "--window", "2"])
    assert result.exit_code == 0, result.output
    assert "window 2 stabilized=true" in result.output


@pytest.mark.parametrize(
    "args",
    [
        ["hc", "k"],
        ["hc", "k", "--n", "-1"],
        ["hc", "k", "--n", "1", "--minus", "--per"],
        ["--bogus", "hc", "k", "--n", "1"],
        ["hc", "examples/broken_unit.yaml", "--n", "1"],
        ["hc", "matrix(k,", "--n", "1"],
        ["chern", "k", "--idempotent", "E12:2", "--n", "1"],
    ],
)
def test_input_errors_exit_two(runner, args):
    assert runner.invoke(cli, args).exit_code == EXIT_INPUT


def test_guardrail_exits_three(runner):
    result = runner.invoke(cli, ["--cap", "10", "hc", "dual_numbers", "--n", "3"])
    assert result.exit_code == EXIT_GUARDRAIL
    assert "error:" in result.output


def test_force_overrides_guardrail(runner):
    result = runner.invoke(cli, ["--cap", "10", "--force", "hc", "dual_numbers", "--n", "3"])
    assert result.exit_code == 0


def test_verify_chern_compat_suite(runner):
    result = runner.invoke(cli, ["verify", "--suite", "theoremB", "--n-max", "2", "--window", "2"])
    assert result.exit_code == 0, result.output
    assert "fail=0" in result.output


def test_strict_turns_approximate_into_failure(runner):
    # at cap 100 the window-1 HC_0^- of T(k) fits but window 2 does not, so its stability is unknown
    args = ["--cap", "100", "verify", "--suite", "additivity", "--corpus", "k", "--degree", "1"]
    lenient = runner.invoke(cli, args)
    strict = runner.invoke(cli, args + ["--strict"])
    assert lenient.exit_code == 0, lenient.output
    assert "fail=0" in lenient.output
    assert "approx=1" in lenient.output
    assert strict.exit_code == EXIT_CHECK_FAILED


def test_refused_checks_are_skipped_not_passed(runner):
    args = ["--cap", "1", "verify", "--suite", "additivity", "--corpus", "matrix(k, 2)"]
    result = runner.invoke(cli, args)
    assert "checks=4 pass=0 fail=0 approx=0 skipped=4" in result.output
    assert "skipped by the size guardrail" in result.output
    assert runner.invoke(cli, args + ["--strict"]).exit_code == EXIT_CHECK_FAILED


def test_skipped_verdicts_in_structured_output(runner):
    args = ["--cap", "1", "--format", "structured", "verify", "--suite", "additivity", "--corpus", "dual_numbers"]
    records = _records(runner.invoke(cli, args).output)
    checks = [r for r in records if r["record"] == "check"]
    assert {r["verdict"] for r in checks} == {"skipped"}
    assert records[-1]["skipped"] == len(checks)
    assert records[-1]["passed"] == 0


@pytest.mark.parametrize(
    "args",
    [
        ["--field", "rat", "hc", "examples/group_algebra_c2_f3.yaml", "--n", "0"],
        ["--field", "rat", "verify", "--suite", "generators", "--corpus", "examples/group_algebra_c2_f3.yaml"],
    ],
)
def test_field_clash_with_document_exits_two(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == EXIT_INPUT
    assert "declared over" in result.output


def test_run_returns_exit_codes(capsys):
    assert run(["un", "--n", "0"]) == 0
    assert "coefficients (1) slots (y0)" in capsys.readouterr().out
    assert run(["hc", "k"]) == EXIT_INPUT
    assert run(["--cap", "10", "hc", "dual_numbers", "--n", "3"]) == EXIT_GUARDRAIL
