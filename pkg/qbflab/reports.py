from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

ACCEPT = "accept-property"
REJECT = "reject-property"
INCONCLUSIVE = "inconclusive"

VERDICT_CHOICES = (
    (ACCEPT, "Accept property"),
    (REJECT, "Reject property"),
    (INCONCLUSIVE, "Inconclusive"),
)


@dataclass
class CheckReport:
    """
    Outcome of a numerical check of an inequality or structural claim.

    ``passed`` is None for purely informational results (for example a search
    outside the proven regime). ``margin`` is oriented so that a nonnegative
    value means the claim holds.
    """

    name: str
    passed: bool | None
    margin: float | None = None
    values: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    seed: int | None = None

    def to_primitive(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "margin": self.margin,
            "values": self.values,
            "notes": list(self.notes),
            "seed": self.seed,
        }


@dataclass
class Report:
    """Envelope written by every CLI invocation."""

    command: str
    seed: int | None
    tolerances: dict[str, float]
    inputs_digest: str | None
    results: dict[str, Any] = field(default_factory=dict)
    passed: bool | None = None
    elapsed_seconds: float = 0.0

    @property
    def exit_status(self):
        return 1 if self.passed is False else 0
