"""Verification reports and their canonical JSON form."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

from .rational import CQ, format_rational


def jsonable(obj: Any) -> Any:
    """Map library values onto JSON types; rationals become ``"num/den"`` strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int, float)):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, CQ):
        return {"re": format_rational(obj.re), "im": format_rational(obj.im)}
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "to_dict"):
        return jsonable(obj.to_dict())
    if hasattr(obj, "__dataclass_fields__"):
        return {k: jsonable(getattr(obj, k)) for k in obj.__dataclass_fields__}
    return str(obj)


@dataclass
class VerificationReport:
    suite: str
    params: Dict[str, Any]
    cases: List[Dict[str, Any]] = field(default_factory=list)
    records: List[Dict[str, Any]] = field(default_factory=list)
    extra: Dict[str, Any] = field(default_factory=dict)

    def add(self, case: int, point, status: str, **quantities) -> Dict[str, Any]:
        """Append a per-point record; status is "pass", "fail" or "skip"."""
        if status not in ("pass", "fail", "skip"):
            raise ValueError(f"bad status {status!r}")
        rec = {"case": case, "point": point, "status": status, **quantities}
        self.records.append(rec)
        return rec

    def merge(self, other: "VerificationReport") -> None:
        offset = len(self.cases)
        self.cases.extend(other.cases)
        for rec in other.records:
            self.records.append({**rec, "case": rec["case"] + offset})

    @property
    def summary(self) -> Dict[str, int]:
        counts = {"pass": 0, "fail": 0, "skip": 0}
        for rec in self.records:
            counts[rec["status"]] += 1
        return {
            "cases": len(self.cases),
            "points": len(self.records),
            "passed": counts["pass"],
            "failures": counts["fail"],
            "skipped": counts["skip"],
        }

    @property
    def failures(self) -> int:
        return self.summary["failures"]

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "params": self.params,
            "cases": self.cases,
            "records": self.records,
            "extra": self.extra,
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(jsonable(self.to_dict()), indent=2, sort_keys=True) + "\n"
