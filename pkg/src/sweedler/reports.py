"""Deterministic text reports for the CLI: checks with witnesses, tables."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field


@dataclass
class Report:
    command: str
    field: str
    trunc: str
    convention: str | None = None
    checks: list = dc_field(default_factory=list)   # (name, passed, detail)
    tables: list = dc_field(default_factory=list)   # (title, headers, rows)

    def check(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append((name, bool(passed), detail))

    def check_issues(self, name: str, issues: list) -> None:
        self.check(name, not issues, str(issues[0]) if issues else "")

    def table(self, title: str, headers: list[str], rows: list) -> None:
        self.tables.append((title, headers, [[str(c) for c in r]
                                             for r in rows]))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def render(self) -> str:
        lines = [f"command: {self.command}",
                 f"field: {self.field}",
                 f"trunc: {self.trunc}"]
        if self.convention is not None:
            lines.append(f"convention: {self.convention}")
        for name, ok, detail in self.checks:
            mark = "PASS" if ok else "FAIL"
            suffix = f"  [{detail}]" if detail else ""
            lines.append(f"{mark} {name}{suffix}")
        for title, headers, rows in self.tables:
            lines.append("")
            lines.append(f"table: {title}")
            widths = [len(h) for h in headers]
            for row in rows:
                for i, cell in enumerate(row):
                    widths[i] = max(widths[i], len(cell))
            lines.append("  " + "  ".join(h.ljust(w)
                                          for h, w in zip(headers, widths)))
            for row in rows:
                lines.append("  " + "  ".join(c.ljust(w)
                                              for c, w in zip(row, widths)))
        lines.append("")
        lines.append("result: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"
