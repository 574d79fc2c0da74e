"""Three-valued verdicts and decomposition traces."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, flag: bool) -> Verdict:
        return cls.TRUE if flag else cls.FALSE


@dataclass(frozen=True)
class TraceStep:
    ring: tuple[str, ...]
    pivot: str | None
    branch: str  # "C", "N", "both" or "base"
    degenerate: bool | None = None

    def to_json(self) -> dict:
        return {"ring": list(self.ring), "pivot": self.pivot,
                "degenerate": self.degenerate, "branch": self.branch}


@dataclass
class CheckOutcome:
    verdict: Verdict
    reasons: list[str] = field(default_factory=list)
    trace: list[TraceStep] = field(default_factory=list)

    @property
    def is_true(self) -> bool:
        return self.verdict is Verdict.TRUE

    @property
    def is_false(self) -> bool:
        return self.verdict is Verdict.FALSE

    @property
    def is_unknown(self) -> bool:
        return self.verdict is Verdict.UNKNOWN

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value, "reasons": list(self.reasons),
                "trace": [t.to_json() for t in self.trace]}
