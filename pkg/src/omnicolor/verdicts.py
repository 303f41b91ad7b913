"""Verdicts and witnesses returned by every identity check.

A :class:`Verdict` is a keyed collection of :class:`Check` results.  Each
check records how many tuples were swept, how many violated the identity,
and the first violation in lexicographic order as a :class:`Witness`
carrying both evaluated sides, so a failure can be rechecked by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


def render_value(value: Any) -> Any:
    """JSON-friendly rendering: scalars become literals, vectors name->literal maps."""
    if hasattr(value, "to_literal"):
        return value.to_literal()
    if isinstance(value, (list, tuple)):
        return [render_value(v) for v in value]
    if isinstance(value, dict):
        return {str(k): render_value(v) for k, v in value.items()}
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(value)


@dataclass(frozen=True)
class Witness:
    args: tuple
    lhs: Any = None
    rhs: Any = None
    note: str = ""

    def to_dict(self) -> dict:
        out = {"args": [str(a) for a in self.args], "lhs": render_value(self.lhs),
               "rhs": render_value(self.rhs)}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Check:
    """Outcome of one identity.  ``passed is None`` means not evaluated."""

    name: str
    passed: bool | None
    witness: Witness | None = None
    count: int = 0
    violations: int = 0
    note: str = ""

    @classmethod
    def skipped(cls, name: str, reason: str) -> Check:
        return cls(name, None, note=reason)

    def to_dict(self) -> dict:
        out = {
            "passed": self.passed,
            "evaluated": self.count,
            "violations": self.violations,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.note:
            out["note"] = self.note
        return out


class Sweep:
    """Accumulates violations of one identity over a lexicographic sweep."""

    def __init__(self, name: str):
        self.name = name
        self.count = 0
        self.violations = 0
        self.witness: Witness | None = None

    def record(self, args, lhs, rhs) -> bool:
        self.count += 1
        if lhs == rhs:
            return True
        self.violations += 1
        if self.witness is None:
            self.witness = Witness(tuple(args), lhs, rhs)
        return False

    def fail(self, args, lhs=None, rhs=None, note=""):
        self.count += 1
        self.violations += 1
        if self.witness is None:
            self.witness = Witness(tuple(args), lhs, rhs, note)

    def check(self, note: str = "") -> Check:
        return Check(self.name, self.violations == 0, self.witness,
                     self.count, self.violations, note)


@dataclass
class Verdict:
    subject: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.passed is False]

    def first_witness(self) -> Witness | None:
        for c in self.checks:
            if c.witness is not None:
                return c.witness
        return None

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": {c.name: c.to_dict() for c in self.checks},
        }

    def render_text(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            status = {True: "pass", False: "FAIL", None: "skip"}[c.passed]
            line = f"  {c.name:<24} {status}"
            if c.count:
                line += f"  ({c.count} evaluated, {c.violations} violations)"
            if c.note:
                line += f"  [{c.note}]"
            lines.append(line)
            if c.witness is not None:
                w = c.witness.to_dict()
                lines.append(f"    witness {tuple(w['args'])}: lhs={w['lhs']} rhs={w['rhs']}")
                if "note" in w:
                    lines.append(f"    {w['note']}")
        return "\n".join(lines)

    def __str__(self):
        return self.render_text()
