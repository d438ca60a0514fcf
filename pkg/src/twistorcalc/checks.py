"""Check records shared by the verification operations and the report."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

from .arith import UniPoly
from .errors import VerificationFailure

PASS = "pass"
FAIL = "fail"
IMPOSED = "imposed-by-citation"


def render(x) -> str:
    """Exact rendering: rationals as ``p/q``, polynomials in descending powers."""
    if isinstance(x, UniPoly):
        return x.format("k")
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(render(v) for v in x) + ")"
    return str(x)


@dataclass
class CheckResult:
    id: str
    status: str
    expected: str
    computed: str
    paper_anchor: str
    note: str = ""

    def to_dict(self) -> dict:
        d = asdict(self)
        if not d["note"]:
            del d["note"]
        return d


class Checker:
    """Collects check results; optionally raises on the first failure."""

    def __init__(self, strict: bool = True):
        self.strict = strict
        self.results: list[CheckResult] = []

    def equal(self, id: str, expected, computed, anchor: str, note: str = "") -> bool:
        ok = expected == computed
        self.results.append(CheckResult(id, PASS if ok else FAIL, render(expected),
                                        render(computed), anchor, note))
        if not ok and self.strict:
            raise VerificationFailure(id, render(expected), render(computed))
        return ok

    def imposed(self, id: str, value, anchor: str, note: str = "") -> None:
        self.results.append(CheckResult(id, IMPOSED, render(value), render(value), anchor, note))

    def extend(self, other: "Checker") -> None:
        self.results.extend(other.results)

    @property
    def failed(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == FAIL]
