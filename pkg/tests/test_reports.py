"""
Verification Report Tests
Report models, rendering and the suite runner
"""

import json

import pytest

from errors import ClassificationError, PrecisionHorizonError, PreconditionError
from oracle.verifier import CheckResult, Verdict
from reports.models import (
    EXIT_FAIL,
    EXIT_INDETERMINATE,
    EXIT_PASS,
    CaseRecord,
    Finding,
    Report,
    Summary,
)
from reports.render import case_frame, render_report, report_json, verdict_counts
from reports.suites import SUITES, CaseCollector, SuiteRunner


def case(n, verdict, reference="claim"):
    return CaseRecord(id=f"s.{n:04d}", reference=reference, verdict=verdict)


@pytest.fixture
def mixed_report():
    cases = [case(1, Verdict.PASS), case(2, Verdict.FAIL, "other"), case(3, Verdict.INDETERMINATE)]
    cases[1].details["expected"] = "pinf[k=1]"
    return Report(suite="s", cases=cases, summary=Summary.of(cases),
                  findings=[Finding(id="f", reference="claim", stated="3j", computed="j")],
                  config={"precision": 32})


class TestModels:

    def test_summary(self, mixed_report):
        summary = mixed_report.summary
        assert (summary.total, summary.passed, summary.failed, summary.indeterminate) == (3, 1, 1, 1)

    def test_exit_codes(self, mixed_report):
        assert mixed_report.exit_code() == EXIT_FAIL
        indeterminate = [case(1, Verdict.PASS), case(2, Verdict.INDETERMINATE)]
        assert Report(suite="s", cases=indeterminate,
                      summary=Summary.of(indeterminate)).exit_code() == EXIT_INDETERMINATE
        assert Report(suite="s").exit_code() == EXIT_PASS

    def test_merge_keeps_findings_once(self, mixed_report):
        merged = Report.merge("all", [mixed_report, mixed_report], {"seed": 0})
        assert merged.summary.total == 6
        assert [f.id for f in merged.findings] == ["f"]
        assert merged.config == {"seed": 0}


class TestRendering:

    def test_json_is_stable(self, mixed_report):
        text = report_json(mixed_report)
        assert text == report_json(mixed_report)
        data = json.loads(text)
        assert data["cases"][2]["verdict"] == "INDETERMINATE"
        assert list(data) == ["suite", "cases", "summary", "findings", "config"]

    def test_case_frame_hides_passing_details(self, mixed_report):
        frame = case_frame(mixed_report)
        assert list(frame["details"]) == ["", "expected=pinf[k=1]", ""]

    def test_verdict_counts(self, mixed_report):
        counts = verdict_counts(mixed_report).set_index("reference")
        assert counts.loc["claim", "PASS"] == 1
        assert counts.loc["claim", "INDETERMINATE"] == 1
        assert counts.loc["other", "FAIL"] == 1

    def test_render(self, mixed_report):
        text = render_report(mixed_report)
        assert text.startswith("suite: s")
        assert "[f] stated: 3j" in text
        assert text.endswith("total 3: 1 passed, 1 failed, 1 indeterminate")

    def test_render_empty(self):
        assert "total 0" in render_report(Report(suite="empty"))


class TestCaseCollector:

    def test_verdict_mapping(self):
        cases = CaseCollector("demo")

        def horizon():
            raise PrecisionHorizonError("series equality")

        def unclassifiable():
            raise ClassificationError("no type")

        assert cases.check("ok", lambda: (True, {})).verdict is Verdict.PASS
        assert cases.check("horizon", horizon).verdict is Verdict.INDETERMINATE
        assert cases.check("broken", unclassifiable).verdict is Verdict.FAIL
        assert cases.expect("value", 2, lambda: 3).verdict is Verdict.FAIL
        assert [c.id for c in cases.cases] == ["demo.0001", "demo.0002", "demo.0003", "demo.0004"]
        assert cases.cases[1].details == {"subcomputation": "series equality"}

    def test_oracle_results(self):
        cases = CaseCollector("demo")
        passed = CheckResult(Verdict.PASS, "pj[k=0]", "pj[k=0]", "w", (1, 2))
        unknown = CheckResult(Verdict.INDETERMINATE, "pj[k=0]", "", "w", subcomputation="decompose")
        assert cases.oracle("a", lambda: passed).details["levels"] == "1,2"
        assert cases.oracle("b", lambda: unknown).verdict is Verdict.INDETERMINATE
        flagged = cases.oracle("c", lambda: passed, flags={"extrapolation": "true"})
        assert flagged.details["extrapolation"] == "true"

    def test_findings_recorded_once(self):
        cases = CaseCollector("demo")
        cases.finding("x", "claim", "3j", "j")
        cases.finding("x", "claim", "other", "other")
        assert cases.findings["x"].stated == "3j"


class TestSuiteRunner:

    def test_suite_names(self, small_config):
        assert set(SuiteRunner(small_config).suites) == set(SUITES)

    def test_series_suite_passes(self, small_config):
        report = SuiteRunner(small_config).run("series")
        assert report.summary.total > 0
        assert report.exit_code() == EXIT_PASS
        assert report.config["coset_bound"] == 1

    def test_seeded_runs_repeat(self, small_config):
        first = report_json(SuiteRunner(small_config).run("borel"))
        assert first == report_json(SuiteRunner(small_config).run("borel"))

    def test_residual_ellis_reductions_flagged(self, small_config):
        report = SuiteRunner(small_config).run("ellis")
        residual = [c for c in report.cases if c.reference == "ellis.reduction.res"]
        assert residual
        assert all(c.details["extrapolation"] == "true" for c in residual)
        assert "ellis-reduction-residual" in {f.id for f in report.findings}
        witnesses = [c for c in report.cases if c.reference == "ellis.non-amenability"]
        assert witnesses and all(c.verdict is Verdict.PASS for c in witnesses)

    def test_unknown_suite(self, small_config):
        with pytest.raises(PreconditionError):
            SuiteRunner(small_config).run("nope")
