"""Structured pass/fail records returned by every verifier."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Failure:
    """First counterexample of a failed verification."""

    location: str
    lhs: str = ""
    rhs: str = ""

    def __str__(self) -> str:
        if self.lhs or self.rhs:
            return f"{self.location}: lhs={self.lhs} rhs={self.rhs}"
        return self.location


@dataclass
class VerificationReport:
    """Outcome of a verification run.

    passed is True iff first_failure is absent; checked counts the
    individual identities/inputs examined.
    """

    name: str
    passed: bool = True
    checked: int = 0
    first_failure: Failure | None = None
    notes: list[str] = field(default_factory=list)

    def count(self, n: int = 1) -> None:
        self.checked += n

    def fail(self, location: str, lhs: str = "", rhs: str = "") -> None:
        if self.passed:
            self.passed = False
            self.first_failure = Failure(location, lhs, rhs)

    def record(self, ok: bool, location: str, lhs: str = "", rhs: str = "") -> bool:
        self.checked += 1
        if not ok:
            self.fail(location, lhs, rhs)
        return ok

    def absorb(self, other: VerificationReport) -> None:
        self.checked += other.checked
        self.notes.extend(other.notes)
        if not other.passed and self.passed:
            self.passed = False
            self.first_failure = other.first_failure

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        line = f"{self.name}: {self.checked} checked, {status}"
        if self.first_failure is not None:
            line += f" ({self.first_failure})"
        return line

    def to_json(self) -> dict:
        data: dict = {"name": self.name, "passed": self.passed, "checked": self.checked}
        if self.first_failure is not None:
            data["first_failure"] = {
                "location": self.first_failure.location,
                "lhs": self.first_failure.lhs,
                "rhs": self.first_failure.rhs,
            }
        if self.notes:
            data["notes"] = list(self.notes)
        return data


class VerificationError(AssertionError):
    """Raised when a construction-time cross-check fails."""
