"""Per-check verdict records shared by the checkers and the harness."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

CONFIRMED = "confirmed"
SKIPPED = "skipped"
COUNTEREXAMPLE = "counterexample-candidate"
ALGORITHM_BUG = "algorithm-bug-candidate"
SEARCHED = "searched"
STATUSES = (CONFIRMED, SKIPPED, COUNTEREXAMPLE, ALGORITHM_BUG, SEARCHED)


@dataclass
class VerdictReport:
    theorem: str
    instance: str
    hypothesis_check: bool
    hypothesis_detail: str = ""
    conclusion_check: Optional[bool] = None
    status: str = SKIPPED
    witness: Dict[str, Any] = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)
    manifest: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if not self.hypothesis_check and self.conclusion_check is not None:
            raise ValueError("conclusion evaluated although the hypothesis failed")

    @property
    def is_failure(self) -> bool:
        return self.status in (COUNTEREXAMPLE, ALGORITHM_BUG)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "hypothesis_check": {"pass": self.hypothesis_check, "detail": self.hypothesis_detail},
            "conclusion_check": self.conclusion_check,
            "status": self.status,
            "witness": self.witness,
            "timings": self.timings,
            "manifest": self.manifest,
        }
