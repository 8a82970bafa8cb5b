"""Pass/fail check records shared by the verification entry points."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["Check", "Report"]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str | None = None   # first counterexample, when failed

    def as_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.detail is not None:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str | None = None) -> None:
        self.checks.append(Check(name, passed, None if passed else detail))

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status}  {c.name}"
            if c.detail:
                line += f"  ({c.detail})"
            out.append(line)
        return out
