"""Text and JSON rendering of verification reports."""

from __future__ import annotations

import json
import math
import sys
from pathlib import Path
from typing import TextIO

from .suites import CaseRecord, VerificationReport

SCHEMA = "ellf4.verification-report"
SCHEMA_VERSION = 1


def _num(x):
    if x is None:
        return None
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, float) and not math.isfinite(x):
        return None
    return x


def _from_num(x, is_complex=False):
    if x is None:
        return None if is_complex else math.inf
    if is_complex:
        return complex(x[0], x[1])
    return x


def report_to_dict(report: VerificationReport) -> dict:
    cases = []
    for r in report.records:
        cases.append({
            "index": r.index,
            "identity": r.identity,
            "inputs": r.inputs,
            "lhs": _num(r.lhs),
            "rhs": _num(r.rhs),
            "abs_err": _num(r.abs_err),
            "rel_err": _num(r.rel_err),
            "n_used": r.n_used,
            "tolerance": r.tolerance,
            "passed": r.passed,
            "error_code": r.error_code,
            "message": r.message,
            "extra": r.extra,
        })
    summary = report.summary()
    summary["max_rel_err"] = _num(summary["max_rel_err"])
    return {
        "schema": SCHEMA,
        "schema_version": SCHEMA_VERSION,
        "suite": report.suite,
        "spec": report.spec,
        "summary": summary,
        "cases": cases,
    }


def report_from_dict(data: dict) -> VerificationReport:
    if data.get("schema") != SCHEMA or data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema {data.get('schema')!r} v{data.get('schema_version')!r}")
    records = [
        CaseRecord(
            index=c["index"], identity=c["identity"], inputs=c["inputs"],
            lhs=_from_num(c["lhs"], True), rhs=_from_num(c["rhs"], True),
            abs_err=_from_num(c["abs_err"]), rel_err=_from_num(c["rel_err"]),
            n_used=c["n_used"], tolerance=c["tolerance"], passed=c["passed"],
            error_code=c["error_code"], message=c["message"], extra=c["extra"])
        for c in data["cases"]
    ]
    return VerificationReport(data["suite"], data["spec"], records, data["summary"]["wall_time_s"])


def to_json(report: VerificationReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, sort_keys=True)


def _fmt(x) -> str:
    return "-" if x is None or (isinstance(x, float) and not math.isfinite(x)) else f"{x:.3e}"


def summary_line(report: VerificationReport) -> str:
    return (f"{report.suite}: pass {report.n_pass}/{len(report.records)}, "
            f"tolerance failures {report.n_tolerance_failures}, errors {report.n_errors}, "
            f"max rel_err {_fmt(report.max_rel_err)}, {report.wall_time:.2f} s")


def to_text(report: VerificationReport) -> str:
    lines = []
    for r in report.records:
        status = "PASS" if r.passed else ("ERROR" if r.error_code else "FAIL")
        line = f"[{status:5}] #{r.index:<3d} {r.identity:<24} rel_err={_fmt(r.rel_err)} tol={r.tolerance:.0e}"
        if r.n_used:
            line += f" n={r.n_used}"
        if r.error_code:
            line += f" code={r.error_code}"
        if "rel_err_trend" in r.extra:
            line += " trend=" + ",".join(_fmt(e) for e in r.extra["rel_err_trend"])
        lines.append(line)
    lines.append(summary_line(report))
    return "\n".join(lines) + "\n"


def emit_report(report: VerificationReport, fmt: str = "text", destination: str | Path | TextIO | None = None):
    """Write the report as ``text`` or ``json`` to a path or stream (stdout by default)."""
    if fmt not in ("text", "json"):
        raise ValueError(f"unknown report format {fmt!r}")
    payload = to_json(report) + "\n" if fmt == "json" else to_text(report)
    if destination is None:
        sys.stdout.write(payload)
        return
    if hasattr(destination, "write"):
        destination.write(payload)
        return
    path = Path(destination)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(payload)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc
