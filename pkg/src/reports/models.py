"""
Report Models
Pydantic records for verification cases, findings and suite reports.
"""

from typing import Dict, List

from pydantic import BaseModel, Field

from oracle.verifier import Verdict

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3


class CaseRecord(BaseModel):
    id: str
    reference: str
    verdict: Verdict
    details: Dict[str, str] = Field(default_factory=dict)


class Finding(BaseModel):
    """A discrepancy between a stated rule and the computed one"""

    id: str
    reference: str
    stated: str
    computed: str
    note: str = ""


class Summary(BaseModel):
    total: int = 0
    passed: int = 0
    failed: int = 0
    indeterminate: int = 0

    @classmethod
    def of(cls, cases: List[CaseRecord]) -> "Summary":
        counts = {verdict: 0 for verdict in Verdict}
        for case in cases:
            counts[case.verdict] += 1
        return cls(total=len(cases), passed=counts[Verdict.PASS], failed=counts[Verdict.FAIL],
                   indeterminate=counts[Verdict.INDETERMINATE])


class Report(BaseModel):
    suite: str
    cases: List[CaseRecord] = Field(default_factory=list)
    summary: Summary = Field(default_factory=Summary)
    findings: List[Finding] = Field(default_factory=list)
    config: Dict[str, int] = Field(default_factory=dict)

    def exit_code(self) -> int:
        if self.summary.failed:
            return EXIT_FAIL
        if self.summary.indeterminate:
            return EXIT_INDETERMINATE
        return EXIT_PASS

    @classmethod
    def merge(cls, suite: str, parts: List["Report"], config: Dict[str, int]) -> "Report":
        """Concatenate suite reports in order, keeping each finding once"""
        cases = [case for part in parts for case in part.cases]
        findings: Dict[str, Finding] = {}
        for part in parts:
            for finding in part.findings:
                findings.setdefault(finding.id, finding)
        return cls(suite=suite, cases=cases, summary=Summary.of(cases),
                   findings=list(findings.values()), config=config)
