from eboca.validate.findings import (
    REGISTRY,
    Finding,
    Severity,
    has_errors,
    report_json,
    report_text,
    sort_findings,
)
from eboca.validate.instances import validate_instances
from eboca.validate.pitfalls import naming_style, scan_pitfalls

__all__ = [
    "Finding",
    "REGISTRY",
    "Severity",
    "has_errors",
    "naming_style",
    "report_json",
    "report_text",
    "scan_pitfalls",
    "sort_findings",
    "validate_instances",
]
