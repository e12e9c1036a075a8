"""Law-by-law verification reports shared by every suite."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional

PASS = "pass"
FAIL = "fail"
RECORDED = "recorded"   # outcome logged, no claim asserted
SKIP = "skip"


@dataclass
class LawResult:
    law: str
    paper_ref: str
    status: str
    counterexample: Optional[str] = None
    checked: int = 0
    note: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        d = {"law": self.law, "paper_ref": self.paper_ref, "status": self.status}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        if self.checked:
            d["checked"] = self.checked
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Report:
    title: str
    results: List[LawResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def __bool__(self):
        return self.ok

    def add(self, law: str, paper_ref: str, result, note: str = None) -> LawResult:
        """Record a CheckResult-like object (anything with ok/checked/counterexample) or a bool."""
        if isinstance(result, bool):
            r = LawResult(law, paper_ref, PASS if result else FAIL, note=note)
        else:
            r = LawResult(law, paper_ref, PASS if result.ok else FAIL,
                          result.counterexample, result.checked, note)
        self.results.append(r)
        return r

    def record(self, law: str, paper_ref: str, note: str) -> LawResult:
        r = LawResult(law, paper_ref, RECORDED, note=note)
        self.results.append(r)
        return r

    def run(self, law: str, paper_ref: str, fn: Callable[[], object]) -> LawResult:
        """Run a check, turning an exception into a failure with the message as counterexample."""
        try:
            result = fn()
        except (ArithmeticError, ValueError, AssertionError) as exc:
            r = LawResult(law, paper_ref, FAIL, f"{type(exc).__name__}: {exc}")
            self.results.append(r)
            return r
        return self.add(law, paper_ref, result)

    def extend(self, other: "Report") -> "Report":
        self.results.extend(other.results)
        return self

    def failures(self) -> List[LawResult]:
        return [r for r in self.results if not r.ok]

    def to_dict(self) -> dict:
        return {"title": self.title, "ok": self.ok, "laws": [r.to_dict() for r in self.results]}

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def render(self) -> str:
        lines = [self.title]
        for r in self.results:
            line = f"  [{r.status.upper():8}] {r.law}  ({r.paper_ref})"
            if r.counterexample:
                line += f"\n             counterexample: {r.counterexample}"
            if r.note:
                line += f"\n             note: {r.note}"
            lines.append(line)
        lines.append(f"  {'OK' if self.ok else 'FAILED'}: "
                     f"{sum(r.status == PASS for r in self.results)} passed, "
                     f"{len(self.failures())} failed, "
                     f"{sum(r.status == RECORDED for r in self.results)} recorded")
        return "\n".join(lines)


def merge(title: str, reports: Iterable[Report]) -> Report:
    out = Report(title)
    for r in reports:
        out.extend(r)
    return out
