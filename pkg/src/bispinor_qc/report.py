"""Check records and suite reports, serialised as JSON by the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    id: str
    anchor: str
    backend: str  # "exact" | "float"
    passed: bool
    max_abs_error: float | None = None
    detail: dict[str, Any] | None = None

    def __post_init__(self):
        if self.backend not in ("exact", "float"):
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.backend == "exact":
            # exact checks are equalities, an error magnitude is meaningless
            self.max_abs_error = None
        self.passed = bool(self.passed)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "id": self.id,
            "anchor": self.anchor,
            "backend": self.backend,
            "status": self.status,
        }
        if self.backend == "float":
            out["max_abs_error"] = self.max_abs_error
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)

    def add(self, *checks: Check) -> "Report":
        self.checks.extend(checks)
        return self

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, check_id: str) -> Check:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def summary(self) -> dict[str, int]:
        n_pass = sum(c.passed for c in self.checks)
        return {"total": len(self.checks), "passed": n_pass, "failed": len(self.checks) - n_pass}

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "checks": [c.to_dict() for c in sorted(self.checks, key=lambda c: c.id)],
            "summary": self.summary(),
        }
