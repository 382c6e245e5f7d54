"""Verification reports: named checks with verdicts, witnesses and counts."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
OUT_OF_SCOPE = "not checked (out of scope)"
NOT_ASSERTED = "not asserted"
INFO = "info"


@dataclass
class Check:
    name: str
    verdict: str
    detail: str = ""
    witnesses: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict == FAIL and not self.witnesses:
            raise ValueError(f"failed check {self.name!r} needs a witness")


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    sections: list[tuple[str, list[str]]] = field(default_factory=list)

    def check(self, name: str, ok: bool, detail: str = "", witnesses=(), counts=None) -> Check:
        """Pass/fail check; ``witnesses`` are only kept when it fails."""
        c = Check(name, PASS if ok else FAIL, detail, [] if ok else [_plain(w) for w in witnesses], counts or {})
        self.checks.append(c)
        return c

    def add(self, name: str, verdict: str, detail: str = "", witnesses=(), counts=None) -> Check:
        c = Check(name, verdict, detail, [_plain(w) for w in witnesses], counts or {})
        self.checks.append(c)
        return c

    def section(self, heading: str, lines) -> None:
        self.sections.append((heading, [str(x) for x in lines]))

    @property
    def failed(self) -> bool:
        return any(c.verdict == FAIL for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def render(self) -> str:
        out = [f"== {self.title} =="]
        for heading, lines in self.sections:
            out.append(f"-- {heading}")
            out.extend(f"   {line}" for line in lines)
        if self.checks:
            out.append("-- checks")
        for c in self.checks:
            line = f"[{c.verdict}] {c.name}"
            if c.detail:
                line += f": {c.detail}"
            out.append(line)
            for k, v in c.counts.items():
                out.append(f"      {k} = {v}")
            for w in c.witnesses[:10]:
                out.append(f"      witness: {w}")
            if len(c.witnesses) > 10:
                out.append(f"      ... {len(c.witnesses) - 10} more")
        return "\n".join(out) + "\n"

    def to_json(self) -> str:
        return json.dumps({"title": self.title, "sections": [{"heading": h, "lines": ls} for h, ls in self.sections],
                           "checks": [asdict(c) for c in self.checks]}, indent=2, default=str)


def _plain(w: Any):
    if isinstance(w, tuple):
        return " ".join(str(x) for x in w)
    return str(w)
