"""Per-bidegree check reports shared by the verification routines."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .basis import BasisTable
from .errors import WindowMismatch


@dataclass
class CheckReport:
    check: str
    params: dict
    window: tuple
    rows: list = field(default_factory=list)  # dicts: deg, wt, lhsRank, rhsRank, ok
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(row["ok"] for row in self.rows) and not self.notes.get("failures")

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> list:
        return [row for row in self.rows if not row["ok"]]

    def add(self, deg, wt, lhs, rhs, ok=None):
        self.rows.append({"deg": deg, "wt": wt, "lhsRank": lhs, "rhsRank": rhs,
                          "ok": lhs == rhs if ok is None else bool(ok)})

    def to_json(self) -> dict:
        doc = {
            "check": self.check,
            "params": self.params,
            "window": list(self.window),
            "perBidegree": self.rows,
            "verdict": self.verdict,
        }
        doc.update(self.notes)
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, default=str, ensure_ascii=False)

    def render(self) -> str:
        lines = [f"# {self.check} {self.params} window [{self.window[0]}, {self.window[1]}]",
                 f"{'deg':>6} {'wt':>4} {'lhs':>5} {'rhs':>5}  ok"]
        for row in self.rows:
            lines.append(f"{row['deg']:>6} {row['wt']:>4} {row['lhsRank']:>5} "
                         f"{row['rhsRank']:>5}  {'yes' if row['ok'] else 'NO'}")
        for key, value in self.notes.items():
            lines.append(f"# {key}: {value}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def compare_tables(check: str, params: dict, lhs: BasisTable, rhs: BasisTable) -> CheckReport:
    """Rank comparison of two tables on the union of their bidegrees."""
    if lhs.window != rhs.window:
        raise WindowMismatch(f"windows {lhs.window} and {rhs.window} differ")
    report = CheckReport(check, params, lhs.window)
    ra, rb = lhs.ranks(), rhs.ranks()
    for bd in sorted(set(ra) | set(rb)):
        report.add(bd.deg, bd.wt, ra.get(bd, 0), rb.get(bd, 0))
    return report
