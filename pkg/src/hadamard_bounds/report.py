"""JSON / CSV emission of verification records with a fixed column order."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any, Iterable, Sequence

from .campaign import VerificationRecord

COLUMNS: tuple[str, ...] = (
    "function", "a", "b", "m", "q", "family",
    "variant1", "variant2", "variant3", "variant4",
    "min", "argmin", "lhs", "slack", "holds",
    # trailing diagnostics
    "p", "status", "reason", "certificate", "approx_derivative",
)


def record_row(r: VerificationRecord) -> dict[str, Any]:
    v = tuple(r.variants) + (None,) * (4 - len(r.variants))
    return {
        "function": r.function,
        "a": r.a,
        "b": r.b,
        "m": r.m,
        "q": r.q,
        "family": r.family,
        "variant1": v[0],
        "variant2": v[1],
        "variant3": v[2],
        "variant4": v[3],
        "min": r.minimum,
        "argmin": r.argmin,
        "lhs": r.lhs,
        "slack": r.slack,
        "holds": r.holds,
        "p": r.p,
        "status": r.status,
        "reason": r.reason,
        "certificate": r.certificate,
        "approx_derivative": r.approx_derivative,
    }


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render(records: Sequence[VerificationRecord], fmt: str) -> str:
    rows = [record_row(r) for r in records]
    if fmt == "json":
        return json.dumps(rows, indent=2, allow_nan=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in rows:
            writer.writerow([_csv_cell(row[c]) for c in COLUMNS])
        return buf.getvalue()
    raise ValueError(f"unknown report format {fmt!r}; expected json or csv")


def emit_report(records: Iterable[VerificationRecord], fmt: str, path: str | Path) -> Path:
    """Write ``records`` to ``path``; identical records give identical bytes."""
    text = render(list(records), fmt)
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        with target.open("w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write report to {target}: {exc.strerror}") from exc
    return target
