"""Verdicts from the checkers and the JSON-lines law report format."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check; truthy iff it passed. ``witness`` explains a failure."""

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> Verdict:
        return cls(True)

    @classmethod
    def failed(cls, witness: Any) -> Verdict:
        return cls(False, witness)


@dataclass(frozen=True)
class LawReport:
    statement: str
    instance: str
    verdict: str
    witness: Any = None

    def __post_init__(self):
        if self.verdict not in ("pass", "fail"):
            raise ValueError(f"verdict must be 'pass' or 'fail', got {self.verdict!r}")
        if (self.verdict == "fail") != (self.witness is not None):
            raise ValueError("a witness is required for failures and forbidden for passes")

    @classmethod
    def from_verdict(cls, statement: str, instance: str, v: Verdict) -> LawReport:
        if v.ok:
            return cls(statement, instance, "pass")
        return cls(statement, instance, "fail", v.witness if v.witness is not None else "unspecified")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> str:
        payload = {"statement": self.statement, "instance": self.instance, "verdict": self.verdict}
        if self.witness is not None:
            payload["witness"] = self.witness
        return json.dumps(payload, sort_keys=True, default=str)
