"""Check reports shared by the law harness, the cocycle checks and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class CheckEntry:
    name: str
    status: str
    witness: Any = None
    count: int = 0

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.count:
            out["count"] = self.count
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    checks: list[CheckEntry] = field(default_factory=list)
    notes: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failures(self) -> list[CheckEntry]:
        return [c for c in self.checks if c.status == FAIL]

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)

    def to_dict(self) -> dict:
        out = {"checks": [c.to_dict() for c in self.checks]}
        if self.notes:
            out["notes"] = self.notes
        return out
