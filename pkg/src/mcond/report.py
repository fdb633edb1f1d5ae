"""Check results and deterministic plain-text reports.

Every axiom sweep produces one `CheckResult` per law.  A failing result
carries the first witness in iteration order, so reports are reproducible
byte for byte on identical inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    label: str
    law: str
    holds: bool
    cases: int
    # witness: ordered (variable, element-name) pairs for the first failure
    witness: tuple[tuple[str, str], ...] | None = None
    lhs: str | None = None
    rhs: str | None = None
    # for quasi-identities: assignments discarded because the hypothesis failed
    vacuous: int | None = None

    def format(self) -> str:
        status = "pass" if self.holds else "FAIL"
        counts = f"{self.cases} cases"
        if self.vacuous is not None:
            counts += f" ({self.vacuous} vacuous)"
        line = f"  {self.label:<16} {self.law:<56} {status}  {counts}"
        if not self.holds and self.witness is not None:
            parts = " ".join(f"{v}={e}" for v, e in self.witness)
            line += f"\n    witness: {parts}"
            if self.lhs is not None:
                line += f"  lhs={self.lhs} rhs={self.rhs}"
        return line


@dataclass
class AxiomReport:
    subject: str
    entries: list[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> None:
        self.entries.append(result)

    def extend(self, other: "AxiomReport") -> None:
        self.entries.extend(other.entries)

    @property
    def ok(self) -> bool:
        return all(e.holds for e in self.entries)

    def failures(self) -> list[CheckResult]:
        return [e for e in self.entries if not e.holds]

    def __getitem__(self, label: str) -> CheckResult:
        for e in self.entries:
            if e.label == label:
                return e
        raise KeyError(label)

    def format(self) -> str:
        lines = [f"check {self.subject}"]
        lines += [e.format() for e in self.entries]
        n_fail = len(self.failures())
        verdict = "PASS" if n_fail == 0 else f"FAIL ({n_fail} of {len(self.entries)})"
        lines.append(f"result: {verdict}  [{len(self.entries)} checks]")
        return "\n".join(lines)
