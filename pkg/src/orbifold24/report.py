"""Deterministic verification reports.

A report is an ordered list of steps, each carrying the computed value, the
expected value when one exists, and a verdict.  Verdicts are "pass", "fail",
"discrepancy-documented" (a known defect of the transcribed reference value,
reported with both numbers), or "info" for steps without expectations.
JSON output is byte-stable: keys sorted, rationals rendered as "p/q".
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Any, List

PASS = "pass"
FAIL = "fail"
INFO = "info"
DISCREPANCY = "discrepancy-documented"


def render_value(v: Any) -> Any:
    """Canonical JSON form: non-integral rationals as 'p/q' strings."""
    if isinstance(v, Q):
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, float):
        raise TypeError("floating-point values do not belong in reports")
    if isinstance(v, (list, tuple)):
        return [render_value(x) for x in v]
    if isinstance(v, dict):
        return {str(k): render_value(x) for k, x in v.items()}
    return str(v)


@dataclass
class Step:
    name: str
    computed: Any
    expected: Any = None
    verdict: str = INFO
    source: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "computed": render_value(self.computed),
            "expected": render_value(self.expected),
            "verdict": self.verdict,
            "source": self.source,
        }


@dataclass
class Report:
    title: str
    steps: List[Step] = field(default_factory=list)
    assumptions: List[str] = field(default_factory=list)

    def check(
        self,
        name: str,
        computed: Any,
        expected: Any = None,
        source: str = "",
        documented: bool = False,
    ) -> Step:
        """Append a step; the verdict compares computed against expected."""
        if expected is None:
            verdict = INFO
        elif render_value(computed) == render_value(expected):
            verdict = PASS
        elif documented:
            verdict = DISCREPANCY
        else:
            verdict = FAIL
        step = Step(name, computed, expected, verdict, source)
        self.steps.append(step)
        return step

    def note(self, name: str, computed: Any, source: str = "") -> Step:
        return self.check(name, computed, None, source)

    def extend(self, other: "Report") -> None:
        self.steps.extend(other.steps)
        for a in other.assumptions:
            if a not in self.assumptions:
                self.assumptions.append(a)

    @property
    def verdict(self) -> str:
        if any(s.verdict == FAIL for s in self.steps):
            return FAIL
        return PASS

    @property
    def exit_code(self) -> int:
        return 0 if self.verdict == PASS else 1

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "verdict": self.verdict,
            "assumptions": list(self.assumptions),
            "steps": [s.to_dict() for s in self.steps],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [f"== {self.title} =="]
        width = max((len(s.name) for s in self.steps), default=0)
        for s in self.steps:
            comp = json.dumps(render_value(s.computed), sort_keys=True)
            if s.verdict == INFO:
                lines.append(f"  {s.name:<{width}}  {comp}")
            else:
                exp = json.dumps(render_value(s.expected), sort_keys=True)
                mark = {PASS: "ok", FAIL: "FAIL", DISCREPANCY: "documented-discrepancy"}[
                    s.verdict
                ]
                if s.verdict == PASS:
                    lines.append(f"  {s.name:<{width}}  {comp}  [{mark}]")
                else:
                    lines.append(
                        f"  {s.name:<{width}}  computed {comp} vs reference {exp}  [{mark}]"
                    )
        if self.assumptions:
            lines.append("  assumptions:")
            lines.extend(f"    - {a}" for a in self.assumptions)
        lines.append(f"  verdict: {self.verdict}")
        return "\n".join(lines)
