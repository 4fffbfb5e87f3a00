"""Check outcomes shared by every validator."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    message: str = ""
    witness: Any = None


@dataclass
class Report:
    """An ordered list of named checks. Validators stop at the first failure unless told otherwise."""

    subject: str
    checks: list[Check] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def add(self, name: str, passed: bool, message: str = "", witness: Any = None) -> bool:
        self.checks.append(Check(name, bool(passed), message, witness))
        return bool(passed)

    def failed_names(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def __str__(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            tail = f" ({c.message})" if c.message else ""
            lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}{tail}")
        return "\n".join(lines)


class VerificationError(RuntimeError):
    """A computed object failed its own post-verification; ``claim`` names the property at stake."""

    def __init__(self, claim: str, message: str, witness: Any = None):
        self.claim = claim
        self.witness = witness
        super().__init__(f"{claim}: {message}")
