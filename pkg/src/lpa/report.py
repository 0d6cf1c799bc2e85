"""Verdicts and machine-readable reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum


class Verdict(str, Enum):
    PASS = "Pass"
    FAIL = "Fail"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value

    @classmethod
    def of(cls, ok: bool) -> "Verdict":
        return cls.PASS if ok else cls.FAIL


def combine(verdicts) -> Verdict:
    """Fail dominates Unknown, which dominates Pass."""
    vs = list(verdicts)
    if any(v == Verdict.FAIL for v in vs):
        return Verdict.FAIL
    if any(v == Verdict.UNKNOWN for v in vs):
        return Verdict.UNKNOWN
    return Verdict.PASS


EXIT_CODES = {Verdict.PASS: 0, Verdict.FAIL: 1, Verdict.UNKNOWN: 2}
USAGE_EXIT = 3


@dataclass
class Check:
    name: str
    verdict: Verdict
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "verdict": self.verdict.value, "detail": self.detail}


@dataclass
class Report:
    command: str
    verdict: Verdict = Verdict.PASS
    checks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    text: str = ""

    def add(self, name, verdict, detail=""):
        if isinstance(verdict, bool):
            verdict = Verdict.of(verdict)
        self.checks.append(Check(name, verdict, detail))
        return verdict

    def finalize(self):
        if self.checks:
            self.verdict = combine(c.verdict for c in self.checks)
        return self

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    def passed(self) -> int:
        return sum(1 for c in self.checks if c.verdict == Verdict.PASS)

    def to_dict(self):
        return {
            "command": self.command,
            "verdict": self.verdict.value,
            "exit_code": self.exit_code,
            "checks": [c.to_dict() for c in self.checks],
            "data": self.data,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def render(self) -> str:
        lines = []
        if self.text:
            lines.append(self.text)
        for c in self.checks:
            line = f"[{c.verdict.value}] {c.name}"
            if c.detail:
                line += f": {c.detail}"
            lines.append(line)
        if self.checks:
            lines.append(f"{self.passed()}/{len(self.checks)} Pass -> {self.verdict.value}")
        return "\n".join(lines)
