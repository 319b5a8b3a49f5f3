"""Command reports: named quantities, Hilbert tables and labelled checks,
rendered as aligned text or as byte-stable JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field


@dataclass
class Check:
    anchor: str
    passed: bool
    note: str = ""


@dataclass
class Report:
    command: str
    values: dict = dc_field(default_factory=dict)
    tables: dict = dc_field(default_factory=dict)  # title -> list of (label, sequence)
    checks: list = dc_field(default_factory=list)
    flags: list = dc_field(default_factory=list)
    timing: dict | None = None
    fmt: str = "text"

    def add(self, key: str, value) -> None:
        self.values[key] = value

    def check(self, anchor: str, ok: bool, note: str = "") -> bool:
        self.checks.append(Check(anchor, bool(ok), note))
        return ok

    def flag(self, text: str) -> None:
        self.flags.append(text)

    def hilbert_table(self, title: str, rows: list[tuple[str, tuple]]) -> None:
        self.tables[title] = rows

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed_anchors(self) -> list[str]:
        return [c.anchor for c in self.checks if not c.passed]

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_dict(self) -> dict:
        out = {
            "command": self.command,
            "values": self.values,
            "hilbert": {t: {label: list(seq) for label, seq in rows} for t, rows in self.tables.items()},
            "checks": [{"anchor": c.anchor, "passed": c.passed, "note": c.note} for c in self.checks],
            "flags": list(self.flags),
            "status": "pass" if self.passed else "fail",
        }
        if self.timing is not None:
            out["timing"] = self.timing
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, default=str) + "\n"

    def to_text(self) -> str:
        lines = [f"$ {self.command}"]
        for key, value in self.values.items():
            lines.append(f"{key}: {_text_value(value)}")
        for title, rows in self.tables.items():
            lines.append("")
            lines.append(title)
            lines.extend(format_table(rows))
        if self.checks:
            lines.append("")
            for c in self.checks:
                mark = "ok" if c.passed else "FAILED"
                lines.append(f"[{mark}] {c.anchor}" + (f" ({c.note})" if c.note else ""))
        for f in self.flags:
            lines.append(f"flag: {f}")
        if self.timing is not None:
            lines.append("timing: " + ", ".join(f"{k}={v}" for k, v in sorted(self.timing.items())))
        lines.append("")
        if self.passed:
            lines.append("status: pass")
        else:
            lines.append("status: FAIL (" + ", ".join(self.failed_anchors) + ")")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_text()


def _text_value(value) -> str:
    if isinstance(value, (list, tuple)):
        return ", ".join(_text_value(v) for v in value) if value else "(none)"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, dict):
        return "; ".join(f"{k}={_text_value(v)}" for k, v in value.items())
    return str(value)


def format_table(rows: list[tuple[str, tuple]]) -> list[str]:
    """Hilbert functions as a degree row followed by one row per algebra.

    Sequences are padded with zeros to a common length.
    """
    top = max((len(seq) for _, seq in rows), default=0)
    header = ("degree", tuple(range(top)))
    full = [header] + [(label, tuple(seq) + (0,) * (top - len(seq))) for label, seq in rows]
    width = max(len(str(x)) for _, seq in full for x in seq) if top else 1
    lw = max(len(label) for label, _ in full)
    return [label.ljust(lw) + "".join(" " + str(x).rjust(width) for x in seq) for label, seq in full]
