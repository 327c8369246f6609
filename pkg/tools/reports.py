"""
Verification reports shared by the Bailey, verifier and CLI layers.

A check never raises on a mathematical mismatch; it returns a report whose
first_failure records the first coefficient where the two sides disagree.
"""

from __future__ import annotations

import functools
import json
import time
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from tools.series_core import TruncatedSeries, rational_to_str


class Variant(Enum):
    """Which constants an identity is checked with."""
    PRINTED = "printed"
    CORRECTED = "corrected"
    NOT_APPLICABLE = "n/a"

    @classmethod
    def parse(cls, text: str) -> "Variant":
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(f"unknown variant {text!r} (expected printed, corrected or n/a)")


class Status(Enum):
    PASS = "pass"
    FAIL = "fail"


@dataclass(frozen=True)
class FirstFailure:
    """First coefficient q^n where the two sides of an identity differ."""
    n: int
    lhs: Fraction
    rhs: Fraction
    detail: str = ""

    @property
    def difference(self) -> Fraction:
        return self.lhs - self.rhs

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "lhs": rational_to_str(self.lhs),
            "rhs": rational_to_str(self.rhs),
            "diff": rational_to_str(self.difference),
        }


@dataclass(frozen=True)
class VerificationReport:
    identity_id: str
    variant: Variant
    order: int
    status: Status
    first_failure: Optional[FirstFailure] = None
    runtime_ms: int = field(default=0, compare=False)
    detail: str = field(default="", compare=False)

    def __post_init__(self):
        if self.status is Status.FAIL and self.first_failure is None:
            raise ValueError("a failing report must carry its first failure")
        if self.status is Status.PASS and self.first_failure is not None:
            raise ValueError("a passing report cannot carry a failure")

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity_id,
            "variant": self.variant.value,
            "order": self.order,
            "status": self.status.value,
            "first_failure": self.first_failure.to_dict() if self.first_failure else None,
            "runtime_ms": self.runtime_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def summary(self) -> str:
        if self.passed:
            return f"{self.identity_id} [{self.variant.value}] pass to q^{self.order}"
        ff = self.first_failure
        return (f"{self.identity_id} [{self.variant.value}] fail at n={ff.n}: "
                f"lhs={rational_to_str(ff.lhs)} rhs={rational_to_str(ff.rhs)} "
                f"diff={rational_to_str(ff.difference)}")


def passing(identity_id: str, order: int, variant: Variant = Variant.NOT_APPLICABLE,
            detail: str = "") -> VerificationReport:
    return VerificationReport(identity_id, variant, order, Status.PASS, detail=detail)


def failing(identity_id: str, order: int, n: int, lhs: Any, rhs: Any,
            variant: Variant = Variant.NOT_APPLICABLE, detail: str = "") -> VerificationReport:
    failure = FirstFailure(n, Fraction(lhs), Fraction(rhs), detail)
    return VerificationReport(identity_id, variant, order, Status.FAIL, failure, detail=detail)


def compare_values(identity_id: str, rows: Iterable[Tuple[int, Any, Any]], order: int,
                   variant: Variant = Variant.NOT_APPLICABLE, detail: str = "") -> VerificationReport:
    """Compare (n, lhs, rhs) rows in ascending n and stop at the first mismatch."""
    for n, lhs, rhs in rows:
        if lhs != rhs:
            return failing(identity_id, order, n, lhs, rhs, variant, detail)
    return passing(identity_id, order, variant, detail)


def compare_series(identity_id: str, lhs: TruncatedSeries, rhs: TruncatedSeries,
                   variant: Variant = Variant.NOT_APPLICABLE, start: int = 0,
                   detail: str = "") -> VerificationReport:
    order = min(lhs.order, rhs.order)
    n = lhs.first_mismatch(rhs, start)
    if n is None:
        return passing(identity_id, order, variant, detail)
    return failing(identity_id, order, n, lhs[n], rhs[n], variant, detail)


def earliest(reports: Iterable[VerificationReport], identity_id: Optional[str] = None,
             variant: Optional[Variant] = None) -> VerificationReport:
    """Merge sub-checks of one identity: the earliest failing coefficient wins."""
    collected: List[VerificationReport] = list(reports)
    if not collected:
        raise ValueError("nothing to merge")
    identity_id = identity_id or collected[0].identity_id
    variant = variant or collected[0].variant
    order = min(r.order for r in collected)
    failures = [r for r in collected if not r.passed]
    if not failures:
        return passing(identity_id, order, variant)
    worst = min(failures, key=lambda r: r.first_failure.n)
    return replace(worst, identity_id=identity_id, variant=variant, order=order)


def timed(func: Callable) -> Callable:
    """Stamp runtime_ms on the report (or list of reports) a check returns."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        result = func(*args, **kwargs)
        elapsed = int((time.perf_counter() - start) * 1000)
        if isinstance(result, list):
            return [replace(r, runtime_ms=elapsed) for r in result]
        return replace(result, runtime_ms=elapsed)
    return wrapper
