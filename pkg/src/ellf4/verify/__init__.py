"""Identity suites, reports and the command-line harness."""

from .report import emit_report, report_from_dict, report_to_dict, to_json, to_text
from .suites import REGISTRY, CaseRecord, SuiteSpec, VerificationReport, run_suite

__all__ = [
    "CaseRecord",
    "REGISTRY",
    "SuiteSpec",
    "VerificationReport",
    "emit_report",
    "report_from_dict",
    "report_to_dict",
    "run_suite",
    "to_json",
    "to_text",
]
