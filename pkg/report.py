from __future__ import annotations

from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence, Tuple

try:
    from wcwidth import wcswidth  # type: ignore
except Exception:
    wcswidth = None  # type: ignore

from exact import is_scalar, scalar_format

PASS = "pass"
FAIL = "fail"
ERROR = "error"

STATUS_ICONS = {PASS: "✅", FAIL: "❌", ERROR: "⚠️ "}


def format_value(value: Any) -> str:
    """Exact text of a result; tuples are joined with '; '."""
    if isinstance(value, (tuple, list)):
        return "; ".join(format_value(v) for v in value)
    if is_scalar(value):
        return scalar_format(value)
    return str(value)


@dataclass
class VerificationReport:
    suite: str
    case: str
    seed: int
    sizes: Dict[str, int] = field(default_factory=dict)
    lhs: str = ""
    rhs: str = ""
    status: str = PASS
    wall_ms: float = 0.0
    message: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False)


def outcome(lhs: Any, rhs: Any) -> Tuple[str, str, str]:
    return format_value(lhs), format_value(rhs), PASS if lhs == rhs else FAIL


def render_jsonl(records: Iterable[VerificationReport]) -> str:
    return "".join(r.to_json() + "\n" for r in records)


def write_report_files(records: Sequence[VerificationReport], latest: str) -> Tuple[str, str]:
    latest_path = Path(latest)
    latest_path.parent.mkdir(parents=True, exist_ok=True)
    ts = datetime.now(timezone.utc).strftime("%Y%m%d_%H%M%S")
    stamped_path = latest_path.parent / f"report_{ts}.jsonl"

    text = render_jsonl(records)
    stamped_path.write_text(text, encoding="utf-8")
    latest_path.write_text(text, encoding="utf-8")
    return str(latest_path), str(stamped_path)


def display_width(text: str) -> int:
    if wcswidth is not None:
        w = wcswidth(text)
        if w >= 0:
            return w
    return len(text)


def pad(text: str, width: int) -> str:
    return text + " " * max(0, width - display_width(text))


def summarize(records: Iterable[VerificationReport]) -> List[Dict[str, Any]]:
    """Per-suite counts in first-seen order."""
    rows: Dict[str, Dict[str, Any]] = {}
    for r in records:
        row = rows.setdefault(r.suite, {"suite": r.suite, PASS: 0, FAIL: 0, ERROR: 0, "ms": 0.0})
        row[r.status] += 1
        row["ms"] += r.wall_ms
    return list(rows.values())


def summary_table(records: Sequence[VerificationReport]) -> str:
    header = ["", "suite", PASS, FAIL, ERROR, "ms"]
    body = []
    for row in summarize(records):
        if row[ERROR]:
            icon = STATUS_ICONS[ERROR]
        elif row[FAIL]:
            icon = STATUS_ICONS[FAIL]
        else:
            icon = STATUS_ICONS[PASS]
        body.append([icon, row["suite"], str(row[PASS]), str(row[FAIL]), str(row[ERROR]), f"{row['ms']:.0f}"])
    widths = [max(display_width(line[i]) for line in [header] + body) for i in range(len(header))]
    lines = ["  ".join(pad(cell, w) for cell, w in zip(line, widths)).rstrip() for line in [header] + body]
    return "\n".join(lines)


def failure_lines(records: Iterable[VerificationReport]) -> List[str]:
    out = []
    for r in records:
        if r.passed:
            continue
        detail = r.message or f"lhs = {r.lhs}, rhs = {r.rhs}"
        out.append(f"{STATUS_ICONS[r.status]} {r.case}: {detail}")
    return out
