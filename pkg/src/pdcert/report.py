"""Check records and report rendering (text and JSON)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"
CITED = "cited-not-checked"
STATUSES = (PASS, FAIL, NOT_APPLICABLE, CITED)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_SHORTFALL = 3


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    evidence: str
    anchor: str

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if not self.anchor.strip():
            raise ValueError(f"check {self.name!r} has no anchor")

    @classmethod
    def of(cls, name: str, ok: bool, evidence: str, anchor: str) -> Check:
        return cls(name, PASS if ok else FAIL, evidence, anchor)

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "evidence": self.evidence, "anchor": self.anchor}


@dataclass
class Report:
    """An ordered list of checks about one context.

    ``verdict`` is true iff every pass/fail check passes; cited and
    not-applicable entries never change it. ``applicable`` is false when a
    precondition of the whole report fails; ``conditional`` marks verdicts
    that rest on an unestablished global hypothesis.
    """

    title: str
    context: dict
    checks: list[Check] = field(default_factory=list)
    facts: dict = field(default_factory=dict)
    applicable: bool = True
    conditional: bool = False

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    @property
    def verdict(self) -> bool:
        return self.applicable and all(c.status != FAIL for c in self.checks)

    def passes_except(self, names) -> bool:
        """All pass/fail checks other than ``names`` pass."""
        return self.applicable and all(c.status != FAIL or c.name in names for c in self.checks)

    @property
    def status(self) -> str:
        if not self.applicable:
            return NOT_APPLICABLE
        return PASS if self.verdict else FAIL

    def as_dict(self) -> dict:
        out = {
            "title": self.title,
            "context": self.context,
            "checks": [c.as_dict() for c in self.checks],
            "verdict": self.verdict,
            "status": self.status,
            "conditional": self.conditional,
        }
        if self.facts:
            out["facts"] = self.facts
        return out

    def to_text(self) -> str:
        ctx = " ".join(f"{k}={_show(v)}" for k, v in self.context.items())
        lines = [f"== {self.title} [{ctx}]"]
        for k, v in self.facts.items():
            lines.append(f"  {k}: {_show(v)}")
        width = max((len(c.name) for c in self.checks), default=0)
        for c in self.checks:
            lines.append(f"  [{c.status:^17}] {c.name:<{width}}  {c.evidence}")
            lines.append(f"  {'':19} {'':<{width}}  ({c.anchor})")
        verdict = self.status
        if self.conditional:
            verdict += " (conditional: a global hypothesis is not established)"
        lines.append(f"  verdict: {verdict}")
        return "\n".join(lines)


def _show(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_show(x) for x in v) + "]"
    if v is None:
        return "-"
    return str(v)


def render_text(reports) -> str:
    if not reports:
        return "(no reports)\n"
    return "\n\n".join(r.to_text() for r in reports) + "\n"


def render_json(reports) -> str:
    return json.dumps([r.as_dict() for r in reports], indent=2, sort_keys=True) + "\n"


def exit_code(reports) -> int:
    return EXIT_OK if all(r.verdict for r in reports) else EXIT_FAIL
