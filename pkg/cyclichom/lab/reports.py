"""Verification reports and their aggregate summary."""

from __future__ import annotations

import json
from typing import Any, Dict, Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from cyclichom.core.enums import Verdict

UNIQUENESS_NOTE = (
    "uniqueness over all natural transformations is outside computational scope; "
    "only the identity clauses and their computable shadows are checked"
)


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


class CheckReport(BaseModel):
    """One check: inputs, verdict and the witness data behind it."""

    model_config = ConfigDict(frozen=True)

    name: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    verdict: Verdict
    witnesses: Dict[str, Any] = Field(default_factory=dict)
    notes: Tuple[str, ...] = ()

    @property
    def sort_key(self) -> Tuple[str, str]:
        return self.name, canonical_json(self.inputs)

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    @property
    def skipped(self) -> bool:
        return self.verdict == Verdict.SKIPPED


class Summary(BaseModel):
    model_config = ConfigDict(frozen=True)

    checks: int = 0
    passed: int = 0
    failed: int = 0
    approximate: int = 0
    skipped: int = 0

    @classmethod
    def of(cls, reports: Iterable[CheckReport]) -> "Summary":
        verdicts = [r.verdict for r in reports]
        return cls(
            checks=len(verdicts),
            passed=verdicts.count(Verdict.PASS),
            failed=verdicts.count(Verdict.FAIL),
            approximate=verdicts.count(Verdict.APPROXIMATE),
            skipped=verdicts.count(Verdict.SKIPPED),
        )

    def line(self) -> str:
        return (
            f"checks={self.checks} pass={self.passed} fail={self.failed} "
            f"approx={self.approximate} skipped={self.skipped}"
        )

    def ok(self, strict: bool = False) -> bool:
        """No failures; under strict, no approximate or skipped verdicts either."""
        if self.failed:
            return False
        return not strict or not (self.approximate or self.skipped)


def verdict_of(ok: bool, approximate: bool = False, skipped: bool = False) -> Verdict:
    if not ok:
        return Verdict.FAIL
    if skipped:
        return Verdict.SKIPPED
    return Verdict.APPROXIMATE if approximate else Verdict.PASS


def sort_reports(reports: Iterable[CheckReport]) -> List[CheckReport]:
    return sorted(reports, key=lambda r: r.sort_key)
