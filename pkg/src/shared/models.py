"""Check report models shared by the bound checks and the sweep harness."""

from enum import Enum
from typing import List

from pydantic import BaseModel, Field, model_validator

from .exceptions import ExitCode


class Verdict(str, Enum):
    """Outcome of a check or a sweep."""

    PASS = "pass"
    PASS_VACUOUS = "pass-vacuous"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"

    @property
    def exit_code(self) -> int:
        """Exit code the command line reports for this verdict."""
        if self is Verdict.FAIL:
            return ExitCode.VIOLATION
        if self is Verdict.INCONCLUSIVE:
            return ExitCode.INCONCLUSIVE
        return ExitCode.PASS


class Report(BaseModel):
    """Itemized result of a named check."""

    check: str
    verdict: Verdict
    evidence: List[str] = Field(default_factory=list)
    counterexamples: List[str] = Field(default_factory=list)
    inconclusive: List[str] = Field(default_factory=list)
    skipped: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    instances_checked: int = 0

    @model_validator(mode="after")
    def _verdict_matches_counterexamples(self) -> "Report":
        if (self.verdict is Verdict.FAIL) != bool(self.counterexamples):
            raise ValueError("verdict 'fail' requires counterexamples and vice versa")
        return self

    @classmethod
    def conclude(
        cls,
        check: str,
        counterexamples: List[str],
        inconclusive: List[str],
        **fields,
    ) -> "Report":
        """Build a report whose verdict follows from its itemized findings."""
        if counterexamples:
            verdict = Verdict.FAIL
        elif inconclusive:
            verdict = Verdict.INCONCLUSIVE
        else:
            verdict = Verdict.PASS
        return cls(
            check=check,
            verdict=verdict,
            counterexamples=counterexamples,
            inconclusive=inconclusive,
            **fields,
        )


def combine_verdicts(verdicts: List[Verdict]) -> Verdict:
    """Fold several verdicts: any failure wins, then inconclusive, then pass."""
    if any(v is Verdict.FAIL for v in verdicts):
        return Verdict.FAIL
    if any(v is Verdict.INCONCLUSIVE for v in verdicts):
        return Verdict.INCONCLUSIVE
    if verdicts and all(v is Verdict.PASS_VACUOUS for v in verdicts):
        return Verdict.PASS_VACUOUS
    return Verdict.PASS
