from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckReport:
    """Outcome of one verification check over an index range."""

    check_id: str
    range: tuple[int, int]
    # first few (input, expected, actual) triples
    violations: list[tuple[Any, Any, Any]] = field(default_factory=list)
    violation_count: int = 0
    elapsed: float = 0.0
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lo, hi = self.range
        text = f"{status} {self.check_id} [{lo}, {hi}] violations={self.violation_count} elapsed={self.elapsed:.3f}s"
        if self.violations:
            text += " first=" + " ".join(f"{i!r}:{e!r}!={a!r}" for i, e, a in self.violations[:3])
        return text

    def record(self) -> dict[str, Any]:
        return {
            "id": self.check_id,
            "range": list(self.range),
            "passed": self.passed,
            "violation_count": self.violation_count,
            "violations": [[repr(v) for v in triple] for triple in self.violations],
        }


class ViolationLog:
    """Collects mismatches, keeping only the first ``cap`` of them."""

    def __init__(self, cap: int = 10):
        self.cap = cap
        self.items: list[tuple[Any, Any, Any]] = []
        self.count = 0

    def check(self, inp, expected, actual) -> None:
        if expected != actual:
            self.add(inp, expected, actual)

    def add(self, inp, expected, actual) -> None:
        self.count += 1
        if len(self.items) < self.cap:
            self.items.append((inp, expected, actual))


def reports_to_text(reports: list[CheckReport]) -> str:
    return "".join(r.line() + "\n" for r in reports)


def reports_to_json(reports: list[CheckReport]) -> str:
    """One JSON object per line; elapsed time is left out so output is reproducible."""
    return "".join(json.dumps(r.record(), sort_keys=True) + "\n" for r in reports)
