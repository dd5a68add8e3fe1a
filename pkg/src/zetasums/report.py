"""Structured pass/fail records for identity-verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    """One verified identity instance, with both sides rendered exactly."""

    identity: str
    params: str
    lhs: str
    rhs: str
    ok: bool


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    def add_equal(self, identity: str, params: str, lhs, rhs) -> bool:
        """Record an exact-equality check; returns whether it held."""
        ok = lhs == rhs
        self.checks.append(Check(identity, params, str(lhs), str(rhs), ok))
        return ok

    def add_true(self, identity: str, params: str, condition: bool, detail: str = "") -> bool:
        """Record a boolean invariant check."""
        self.checks.append(Check(identity, params, detail or str(condition), "expected to hold", bool(condition)))
        return bool(condition)

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.ok)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.suite}: {self.passed}/{len(self.checks)} checks passed"

    def render(self, verbose: bool = False) -> str:
        lines = [self.summary()]
        shown = self.checks if verbose else self.failures()
        for c in shown:
            mark = "ok  " if c.ok else "FAIL"
            lines.append(f"  {mark} {c.identity} [{c.params}]: lhs={c.lhs} rhs={c.rhs}")
        return "\n".join(lines)
