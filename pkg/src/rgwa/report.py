"""Pass/fail verdicts with per-condition violation witnesses."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    """One violated condition together with a witness tuple.

    The witness is the lexicographically minimal tuple of element indices
    that, substituted into the condition, evaluates to a genuine inequality.
    """

    condition: str
    witness: tuple[int, ...]

    def to_json(self) -> dict:
        return {"condition": self.condition, "witness": list(self.witness)}


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an axiom/condition scan.

    At most one violation is recorded per condition id; the report passes
    exactly when the violation list is empty.
    """

    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def conditions(self) -> tuple[str, ...]:
        """Ids of all violated conditions, in canonical check order."""
        return tuple(v.condition for v in self.violations)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [v.to_json() for v in self.violations],
        }


PASSED = CheckReport()
