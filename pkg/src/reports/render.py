"""
Report Rendering
JSON and tabular text forms of verification reports.
"""

import pandas as pd

from reports.models import Report

CASE_COLUMNS = ["id", "reference", "verdict", "details"]


def report_json(report: Report) -> str:
    """Deterministic JSON; no timestamps, fields in declaration order"""
    return report.model_dump_json(indent=2)


def case_frame(report: Report) -> pd.DataFrame:
    rows = [{
        "id": case.id,
        "reference": case.reference,
        "verdict": case.verdict.value,
        "details": "" if case.verdict.value == "PASS" else
        "; ".join(f"{key}={value}" for key, value in sorted(case.details.items())),
    } for case in report.cases]
    return pd.DataFrame(rows, columns=CASE_COLUMNS)


def verdict_counts(report: Report) -> pd.DataFrame:
    """Verdict counts per claim reference"""
    frame = case_frame(report)
    if frame.empty:
        return pd.DataFrame(columns=["reference", "PASS", "FAIL", "INDETERMINATE"])
    counts = pd.crosstab(frame["reference"], frame["verdict"])
    for verdict in ("PASS", "FAIL", "INDETERMINATE"):
        if verdict not in counts.columns:
            counts[verdict] = 0
    return counts[["PASS", "FAIL", "INDETERMINATE"]].reset_index()


def render_report(report: Report) -> str:
    summary = report.summary
    lines = [
        f"suite: {report.suite}",
        "config: " + ", ".join(f"{key}={value}" for key, value in report.config.items()),
        "",
        verdict_counts(report).to_string(index=False),
    ]
    problems = case_frame(report)
    problems = problems[problems["verdict"] != "PASS"]
    if not problems.empty:
        lines += ["", problems.to_string(index=False)]
    if report.findings:
        lines += ["", "findings:"]
        for finding in report.findings:
            lines.append(f"  [{finding.id}] stated: {finding.stated}")
            lines.append(f"  {' ' * (len(finding.id) + 2)} computed: {finding.computed}")
            if finding.note:
                lines.append(f"  {' ' * (len(finding.id) + 2)} note: {finding.note}")
    lines += ["", f"total {summary.total}: {summary.passed} passed, {summary.failed} failed, "
                  f"{summary.indeterminate} indeterminate"]
    return "\n".join(lines)
