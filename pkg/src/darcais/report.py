"""Structured verification outcomes and their JSON serialization."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any

STATUSES = (
    "verified",
    "certified",
    "consistent",
    "falsified",
    "violation_candidate",
    "inconclusive",
    "hypothesis_violated",
    "indeterminate",
)

# Worst first; used to aggregate suites.
_SEVERITY = {
    "falsified": 7,
    "violation_candidate": 6,
    "hypothesis_violated": 5,
    "indeterminate": 4,
    "inconclusive": 3,
    "consistent": 2,
    "certified": 1,
    "verified": 0,
}

NEEDS_WITNESS = ("falsified", "violation_candidate")

# Wall-clock timing breaks byte-identical output, so it is opt-in.
_timing_enabled = False


def enable_timing(flag: bool = True) -> None:
    global _timing_enabled
    _timing_enabled = flag


@dataclass
class Report:
    claim_id: str
    params: dict[str, Any] = field(default_factory=dict)
    status: str = "verified"
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    seed: int | None = None
    timing_ms: int = 0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status not in NEEDS_WITNESS

    def validate(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status in NEEDS_WITNESS and not self.witnesses:
            raise ValueError(f"status {self.status} requires a witness")
        if self.timing_ms < 0:
            raise ValueError("negative timing")

    def to_dict(self) -> dict[str, Any]:
        self.validate()
        d = {
            "claim_id": self.claim_id,
            "params": jsonable(self.params),
            "status": self.status,
            "witnesses": jsonable(self.witnesses),
            "timing_ms": self.timing_ms,
        }
        if self.seed is not None:
            d["seed"] = self.seed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def jsonable(obj: Any) -> Any:
    """Convert nested values to JSON-safe form; big integers become decimal strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        # Keep small ints as numbers, anything beyond double precision as a string.
        return obj if abs(obj) < 2**53 else str(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Report):
        return obj.to_dict()
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in obj]
        if isinstance(obj, (set, frozenset)):
            items.sort(key=lambda v: (str(type(v)), v))
        return items
    if hasattr(obj, "to_jsonable"):
        return obj.to_jsonable()
    return str(obj)


def worst_status(statuses) -> str:
    statuses = list(statuses)
    if not statuses:
        return "verified"
    return max(statuses, key=_SEVERITY.__getitem__)


def stamp(report: Report, t0: float) -> Report:
    if _timing_enabled:
        report.timing_ms = int((time.perf_counter() - t0) * 1000)
    return report
