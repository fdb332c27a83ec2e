"""Verdict and guard vocabulary shared by every checker in the package."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "PASS"
FAIL = "FAIL"
NOT_APPLICABLE = "NOT_APPLICABLE"


class GuardError(Exception):
    """A size or search-space guard rejected the computation.

    ``limit`` names the guard that fired so callers (and the CLI exit-code
    logic) can distinguish guard rejections from bad input.
    """

    def __init__(self, limit: str, message: str):
        super().__init__(message)
        self.limit = limit


@dataclass(frozen=True)
class CheckReport:
    """Structured pass/fail verdict with a concrete witness on failure.

    ``witness`` is None on success; on failure it holds whatever concrete
    data pinpoints the violation (an index, a subset, a coefficient pair).
    ``details`` carries computed values and the convention flags in effect.
    """

    name: str
    verdict: str
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.verdict,
            "witness": self.witness,
            "details": self.details,
        }


def report(name: str, ok: bool, witness: dict | None = None, **details) -> CheckReport:
    """Build a PASS/FAIL report in one line."""
    return CheckReport(name, PASS if ok else FAIL, witness if not ok else None, details)
