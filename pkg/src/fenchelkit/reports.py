"""Structured pass/fail reports shared by the certificate routines."""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    """One named check with its worst observed margin.

    ``margin`` is oriented so that nonnegative means "satisfied with room":
    a failing check has a negative margin (or a note explaining the failure).
    """

    name: str
    passed: bool
    margin: float
    note: str = ""


@dataclass
class CertificateReport:
    title: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, name: str, passed: bool, margin: float, note: str = "") -> Check:
        check = Check(name, bool(passed), float(margin), note)
        self.checks.append(check)
        return check

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def worst(self) -> Check | None:
        if not self.checks:
            return None
        return min(self.checks, key=lambda c: c.margin)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [dataclasses.asdict(c) for c in self.checks],
            "notes": list(self.notes),
        }

    def format_lines(self) -> list[str]:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            status = "ok  " if c.passed else "FAIL"
            note = f"  ({c.note})" if c.note else ""
            lines.append(f"  [{status}] {c.name}: margin={c.margin:.3e}{note}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return lines


__all__ = ["Check", "CertificateReport"]
