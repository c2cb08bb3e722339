"""Machine-readable check reports shared by the verification suites and the CLI."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    counterexample: Any = None
    detail: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class CheckReport:
    """Outcome of one suite: it passes iff every check passes."""

    suite: str
    checks: list[Check] = field(default_factory=list)
    window: int | None = None
    wall_time: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, counterexample=None, detail: str = "") -> Check:
        c = Check(name, bool(passed), counterexample, detail)
        self.checks.append(c)
        return c

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @contextmanager
    def timed(self):
        t0 = time.perf_counter()
        try:
            yield self
        finally:
            self.wall_time += time.perf_counter() - t0

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "pass": self.passed,
            "window": self.window,
            "wall_time": round(self.wall_time, 6),
            "checks": [c.to_json() for c in self.checks],
        }
        out.update(self.extra)
        return out


def exit_code(reports) -> int:
    """0 when every report passes, 1 otherwise."""
    if isinstance(reports, CheckReport):
        reports = [reports]
    return 0 if all(r.passed for r in reports) else 1
