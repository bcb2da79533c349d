from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass

from eboca.rdf.terms import Term


class Severity(str, enum.Enum):
    ERROR = "Error"
    WARNING = "Warning"


# code -> (severity, short title)
REGISTRY: dict[str, tuple[Severity, str]] = {
    "E1": (Severity.ERROR, "association endpoints"),
    "E2": (Severity.ERROR, "score or confidence outside [0, 1]"),
    "E3": (Severity.ERROR, "evidence kind and derivation"),
    "E4": (Severity.ERROR, "invalid ISO-8601 date"),
    "E5": (Severity.ERROR, "paragraph not part of an expression"),
    "P04": (Severity.ERROR, "Creating unconnected ontology elements"),
    "P08": (Severity.ERROR, "Missing annotations"),
    "P11": (Severity.ERROR, "Missing domain or range in properties"),
    "P13": (Severity.WARNING, "Inverse relationships not explicitly declared"),
    "P22": (Severity.WARNING, "Using different naming conventions in the ontology"),
}


@dataclass(frozen=True)
class Finding:
    code: str
    subject: Term
    message: str

    def __post_init__(self):
        if self.code not in REGISTRY:
            raise ValueError(f"unregistered finding code {self.code!r}")

    @property
    def severity(self) -> Severity:
        return REGISTRY[self.code][0]

    def sort_key(self) -> tuple[str, str, str]:
        return (self.code, self.subject.n3(), self.message)

    def to_dict(self) -> dict:
        value = getattr(self.subject, "value", None) or self.subject.n3()
        return {
            "code": self.code,
            "severity": self.severity.value,
            "subject": value,
            "message": self.message,
        }


def sort_findings(findings) -> list[Finding]:
    return sorted(set(findings), key=Finding.sort_key)


def has_errors(findings) -> bool:
    return any(f.severity is Severity.ERROR for f in findings)


def report_json(findings) -> str:
    return json.dumps([f.to_dict() for f in findings], indent=2, ensure_ascii=False) + "\n"


def report_text(findings) -> str:
    if not findings:
        return "no findings\n"
    counts = Counter(f.code for f in findings)
    lines = [
        f"{code} {REGISTRY[code][0].value:<7} {n:>5}  {REGISTRY[code][1]}"
        for code, n in sorted(counts.items())
    ]
    errors = sum(1 for f in findings if f.severity is Severity.ERROR)
    lines.append(f"{len(findings)} findings, {errors} errors")
    return "\n".join(lines) + "\n"
