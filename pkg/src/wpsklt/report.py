"""Check lines shared by the validation and certificate reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactmath import display, rat_to_json


@dataclass(frozen=True)
class Check:
    label: str
    passed: Optional[bool]  # None means skipped
    detail: str = ""
    value: Optional[Fraction] = None

    @property
    def status(self) -> str:
        return {True: "pass", False: "FAIL", None: "skipped"}[self.passed]

    def to_json(self) -> dict:
        out = {"label": self.label, "status": self.status, "detail": self.detail}
        if self.value is not None:
            out["value"] = rat_to_json(self.value)
            out["value_decimal"] = display(self.value)
        return out


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, label, passed, detail="", value=None) -> Check:
        c = Check(label, None if passed is None else bool(passed), detail,
                  None if value is None else Fraction(value))
        self.checks.append(c)
        return c

    @property
    def ok(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.passed is False]

    def __getitem__(self, label: str) -> Check:
        for c in self.checks:
            if c.label == label:
                return c
        raise KeyError(label)

    def to_json(self) -> dict:
        return {"title": self.title, "ok": self.ok, "checks": [c.to_json() for c in self.checks]}

    def render(self) -> str:
        lines = [f"{self.title}: {'all checks pass' if self.ok else 'FAILED'}"]
        for c in self.checks:
            extra = f" = {c.value} ({display(c.value)})" if c.value is not None else ""
            lines.append(f"  [{c.status:>7}] {c.label}{extra}" + (f"  {c.detail}" if c.detail else ""))
        return "\n".join(lines)
