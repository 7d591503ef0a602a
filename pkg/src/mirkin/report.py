from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Failure:
    check: str
    witness: dict[str, Any]
    observed: Any
    expected: Any

    def __str__(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.witness.items())
        return (f"{self.check}: observed {self.observed}, "
                f"expected {self.expected} [{args}]")


@dataclass
class PropertyReport:
    """Outcome of a property suite: a check count, failures, and constants."""

    suite: str
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)
    constants: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, check: str, observed: Any, expected: Any,
               **witness: Any) -> bool:
        self.checks += 1
        if not ok:
            self.failures.append(Failure(check, witness, observed, expected))
        return ok

    def merge(self, other: PropertyReport) -> None:
        self.checks += other.checks
        self.failures.extend(other.failures)
        for key, value in other.constants.items():
            self.constants[f"{other.suite}.{key}"] = value
        self.notes.extend(f"{other.suite}: {n}" for n in other.notes)

    def lines(self) -> list[str]:
        status = "PASS" if self.passed else "FAIL"
        out = [f"{self.suite} {status} checks={self.checks} "
               f"failures={len(self.failures)}"]
        out += [f"  const {k} = {v}" for k, v in self.constants.items()]
        out += [f"  note {n}" for n in self.notes]
        out += [f"  fail {f}" for f in self.failures]
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())
