from __future__ import annotations

import pytest

from cyclichom.algebra import build, parse_expression
from cyclichom.core.enums import InvariantKind, Verdict
from cyclichom.core.errors import GuardrailExceededError, InputFormatError, NotACycleError
from cyclichom.lab import (
    standard_idempotents,
    verify_additivity,
    verify_complex_identities,
    verify_conjugation_invariance,
    verify_generators,
    verify_matrix_agreement,
    verify_minus_compat,
    verify_operator_tables,
    verify_parity,
    verify_s_compat,
    verify_scalar_separation,
)
from cyclichom.lab.checks import guarded
from cyclichom.lab.corpus import corpus, shear
from cyclichom.lab.reports import UNIQUENESS_NOTE, CheckReport, Summary
from cyclichom.linalg.field import FieldSpec


class TestOperatorChecks:
    def test_operator_tables(self):
        report = verify_operator_tables(8)
        assert report.verdict == Verdict.PASS

    def test_parity(self):
        assert verify_parity(9).passed

    @pytest.mark.parametrize("expression", ["dual_numbers", "upper_triangular(k)", "matrix(k, 2)"])
    def test_complex_identities(self, expression):
        report = verify_complex_identities(build(parse_expression(expression)), 3)
        assert report.passed, report.witnesses

    def test_prime_field_tables(self):
        assert verify_operator_tables(6, FieldSpec.prime(3)).passed


class TestGeneratorChecks:
    def test_generators(self):
        report = verify_generators(4, 3)
        assert report.passed, report.witnesses
        assert report.witnesses["dims"]["HC_8"] == 1

    def test_scalar_separation_over_prime_field_skips_scalars_outside_the_field(self):
        report = verify_scalar_separation(1, scalars=(1, 2, "1/2", "1/5"), field=FieldSpec.prime(5))
        assert report.passed, report.witnesses
        assert report.witnesses["skipped"] == ["1/5"]
        assert UNIQUENESS_NOTE in report.notes


class TestInvariantChecks:
    @pytest.mark.parametrize("invariant", [InvariantKind.HH, InvariantKind.HC])
    def test_additivity_over_dual_numbers(self, dual, invariant):
        report = verify_additivity(dual, invariant, 2)
        assert report.passed, report.witnesses

    def test_additivity_of_minus_and_tower(self, k):
        assert verify_additivity(k, InvariantKind.HC_MINUS, 2).verdict == Verdict.PASS
        assert verify_additivity(k, InvariantKind.TOWER_LIMIT, 2).verdict == Verdict.PASS

    def test_additivity_skips_refused_degrees(self, dual):
        report = verify_additivity(dual, InvariantKind.HC, 4, cap=2_000)
        assert report.passed
        assert report.witnesses["skipped"]

    def test_additivity_with_every_degree_refused_is_skipped(self, dual):
        report = verify_additivity(dual, InvariantKind.HH, 2, cap=1)
        assert report.verdict == Verdict.SKIPPED
        assert report.witnesses["skipped"] == [0, 1, 2]
        assert report.witnesses["dims"] == {}

    def test_matrix_agreement_with_every_degree_refused_is_skipped(self):
        report = verify_matrix_agreement(2, 1, cap=1)
        assert report.verdict == Verdict.SKIPPED

    def test_complex_identities_beyond_the_cap_are_skipped(self, dual):
        assert verify_complex_identities(dual, 3, cap=4).verdict == Verdict.SKIPPED

    def test_matrix_agreement(self):
        report = verify_matrix_agreement(2, 3)
        assert report.passed, report.witnesses
        assert report.witnesses["traces"]["ch_1(E11)"] == "1"


class TestChernChecks:
    def setup_method(self):
        self.idempotents = dict(standard_idempotents())

    @pytest.mark.parametrize("label", ["unit", "E11:2", "E11:2^(1+E12)", "E11:2^(1+E21)", "zero"])
    def test_s_compat(self, label):
        e = self.idempotents[label]
        for n in range(1, 4):
            for m in range(n):
                report = verify_s_compat(e, n, m, label)
                assert report.passed, report.witnesses

    def test_unit_trail_is_constant(self):
        report = verify_s_compat(self.idempotents["unit"], 3, 0, "unit")
        assert report.witnesses["psi_trail"] == ["1", "1", "1", "1"]

    @pytest.mark.parametrize("label", ["unit", "E11:2", "E11:2^(1+E12)"])
    def test_minus_compat(self, label):
        for m in range(3):
            assert verify_minus_compat(self.idempotents[label], m, 3, label).passed

    def test_unit_projection_is_componentwise(self):
        report = verify_minus_compat(self.idempotents["unit"], 2, 3, "unit")
        assert report.witnesses["componentwise"] is True

    def test_conjugation_invariance(self, k):
        report = verify_conjugation_invariance(self.idempotents["E11:2"], shear(k, 2, 1, 0), 1, "E11:2")
        assert report.passed

    def test_s_compat_needs_ordered_degrees(self):
        with pytest.raises(InputFormatError):
            verify_s_compat(self.idempotents["unit"], 1, 1)

    def test_minus_compat_needs_m_inside_window(self):
        with pytest.raises(InputFormatError):
            verify_minus_compat(self.idempotents["unit"], 3, 2)

    def test_bad_degrees_fail_instead_of_crashing(self):
        e = self.idempotents["unit"]
        report = guarded("s_compat", {"n": 1, "m": 2}, lambda: verify_s_compat(e, 1, 2))
        assert report.verdict == Verdict.FAIL
        assert "m < n" in report.witnesses["error"]


class TestGuarded:
    def test_guardrail_becomes_skip(self):
        def refuse() -> CheckReport:
            raise GuardrailExceededError("too big", required=10, cap=5)

        report = guarded("refused", {"x": 1}, refuse)
        assert report.verdict == Verdict.SKIPPED
        assert not report.passed
        assert report.witnesses == {"skipped": True, "required": 10, "cap": 5}

    def test_other_errors_fail(self):
        def broken() -> CheckReport:
            raise NotACycleError("not closed")

        report = guarded("broken", {}, broken)
        assert report.verdict == Verdict.FAIL
        assert report.witnesses["error"] == "not closed"


class TestReports:
    def test_summary_line(self):
        reports = [
            CheckReport(name="a", verdict=Verdict.PASS),
            CheckReport(name="b", verdict=Verdict.FAIL),
            CheckReport(name="c", verdict=Verdict.APPROXIMATE),
            CheckReport(name="d", verdict=Verdict.SKIPPED),
        ]
        assert Summary.of(reports).line() == "checks=4 pass=1 fail=1 approx=1 skipped=1"

    @pytest.mark.parametrize(
        "verdicts, lenient, strict",
        [
            ([Verdict.PASS], True, True),
            ([Verdict.PASS, Verdict.SKIPPED], True, False),
            ([Verdict.PASS, Verdict.APPROXIMATE], True, False),
            ([Verdict.PASS, Verdict.FAIL], False, False),
        ],
    )
    def test_summary_ok(self, verdicts, lenient, strict):
        summary = Summary.of(CheckReport(name=str(i), verdict=v) for i, v in enumerate(verdicts))
        assert summary.ok() is lenient
        assert summary.ok(strict=True) is strict

    def test_corpus_builds(self):
        assert len(corpus()) == 7
