"""Structured run reports and their serializations.

A Report carries command metadata, a status, and a flat list of findings
(dicts with a "kind" field and fixed key order). Serialized output is
byte-deterministic for identical inputs: wall-clock timings are collected
but rendered only on request, and worker counts never appear.

Formats: "human" (one line per finding plus a status line), "jsonl" (one
JSON object per finding), "csv" (fixed header per command's primary kind;
detail-kind findings are jsonl/human only).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

STATUS_VERIFIED = "verified"
STATUS_FAILED = "failed"
STATUS_COMPUTED = "computed"

FORMATS = ("human", "jsonl", "csv")

# Fixed column sets for the CSV rendering of each summary kind.
CSV_COLUMNS = {
    "dim": ["n", "m", "dimension", "witness", "exhausted_sizes", "symmetry"],
    "distances": ["n", "pairs_checked", "mismatches"],
    "tables": ["n", "rows_checked", "mismatches", "quarantined"],
    "lower": ["n", "m", "size", "found", "candidates_checked", "symmetry"],
    "upper": ["k", "n", "resolving", "family_mismatches", "distinct"],
    "good-lists": ["n", "vertex", "expected_size", "computed_size", "match"],
    "witness-pairs": ["n", "claims", "failures"],
}


@dataclass
class Report:
    command: str
    params: dict
    status: str
    findings: list[dict] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    version: str = ""

    @property
    def failed(self) -> bool:
        return self.status == STATUS_FAILED


def _cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if isinstance(value, bool):
        return str(int(value))
    return str(value)


def render_human(report: Report, include_timing: bool = False) -> str:
    lines = [f"# gpdim {report.command} (v{report.version})"]
    if report.params:
        pairs = " ".join(f"{k}={_cell(v)}" for k, v in report.params.items())
        lines.append(f"# params: {pairs}")
    for f in report.findings:
        kind = f.get("kind", "?")
        rest = " ".join(f"{k}={_cell(v)}" for k, v in f.items() if k != "kind")
        lines.append(f"{kind}: {rest}")
    lines.append(f"status: {report.status}")
    if include_timing:
        for step, secs in report.timings.items():
            lines.append(f"timing: {step}={secs:.3f}s")
    return "\n".join(lines) + "\n"


def render_jsonl(report: Report) -> str:
    return "".join(json.dumps(f, separators=(", ", ": ")) + "\n" for f in report.findings)


def render_csv(report: Report) -> str:
    primary = report.params.get("kind", report.command)
    columns = CSV_COLUMNS[primary]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for f in report.findings:
        if f.get("kind") != primary:
            continue
        writer.writerow([_cell(f.get(c, "")) for c in columns])
    return buf.getvalue()


def render(report: Report, fmt: str, include_timing: bool = False) -> str:
    """Serialize a report; deterministic for every format."""
    if fmt == "human":
        return render_human(report, include_timing)
    if fmt == "jsonl":
        return render_jsonl(report)
    if fmt == "csv":
        return render_csv(report)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def load_jsonl(text: str) -> list[dict]:
    """Parse findings back from a jsonl rendering (for re-rendering)."""
    return [json.loads(line) for line in text.splitlines() if line.strip()]
