"""Outcome records for named verification tasks."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

from .algebra.poly import Poly
from .algebra.scalars import QuadraticNumber, format_scalar


def jsonable(obj: Any) -> Any:
    """Recursively convert exact scalars, polynomials and containers into JSON values."""
    from fractions import Fraction

    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, (Fraction, QuadraticNumber)):
        return format_scalar(obj)
    if isinstance(obj, Poly):
        return str(obj)
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in obj]
        if isinstance(obj, (set, frozenset)):
            items.sort(key=repr)
        return items
    return str(obj)


@dataclass
class CheckReport:
    """Result of one check: ``status`` is ``"pass"`` or ``"fail"``.

    A failing report always carries a witness (the offending polynomial, point
    or value); ``details`` holds whatever the check wants to record on success.
    """

    name: str
    status: str
    witness: Any = None
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"invalid status {self.status!r}")
        if self.status == "fail" and self.witness is None:
            self.witness = "no witness recorded"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "name": self.name,
            "status": self.status,
            "witness": jsonable(self.witness),
            "details": jsonable(self.details),
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 4)
        return out


def report(name: str, ok: bool, witness: Any = None, details: dict | None = None, started: float | None = None) -> CheckReport:
    elapsed = time.perf_counter() - started if started is not None else 0.0
    return CheckReport(
        name=name,
        status="pass" if ok else "fail",
        witness=None if ok else witness,
        details=details or {},
        elapsed=elapsed,
    )


def timed(name: str, fn: Callable[[], CheckReport]) -> CheckReport:
    """Run ``fn``; exceptions become failing reports, elapsed time is filled in."""
    start = time.perf_counter()
    try:
        rep = fn()
    except Exception as exc:  # a crashing check is a failing check
        rep = CheckReport(name=name, status="fail", witness=f"{type(exc).__name__}: {exc}")
    rep.name = name
    rep.elapsed = time.perf_counter() - start
    return rep


@dataclass
class TableReport:
    """A recomputed table diffed against its embedded expected rows."""

    table_id: str
    rows: list
    expected: list
    mismatches: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def match(self) -> bool:
        return not self.mismatches

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "table": self.table_id,
            "match": self.match,
            "rows": jsonable(self.rows),
            "expected": jsonable(self.expected),
            "mismatches": jsonable(self.mismatches),
            "notes": jsonable(self.notes),
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 4)
        return out

    def as_check(self, name: str | None = None) -> CheckReport:
        return CheckReport(
            name=name or f"table_{self.table_id}",
            status="pass" if self.match else "fail",
            witness=self.mismatches or None,
            details={"rows": len(self.rows), **self.notes},
            elapsed=self.elapsed,
        )
