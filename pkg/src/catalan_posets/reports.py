"""Uniform result record for the verification checks."""

from __future__ import annotations

from dataclasses import dataclass

#: Number of violation details retained per report; the rest are dropped
#: after a closing marker so a badly failing check cannot flood memory.
MAX_VIOLATION_DETAILS = 5


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check at one ground size.

    examined counts the pairs or subsets actually tested.  Wall time is
    carried for diagnostics but deliberately left out of summary_line so
    the line is reproducible byte for byte.
    """

    name: str
    n: int
    examined: int
    violations: tuple[str, ...] = ()
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary_line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{self.name} n={self.n}: examined={self.examined} {status}"


def note_violation(violations: list[str], message: str) -> None:
    """Append a violation detail, capping the list."""
    if len(violations) < MAX_VIOLATION_DETAILS:
        violations.append(message)
    elif len(violations) == MAX_VIOLATION_DETAILS:
        violations.append("further violations omitted")
