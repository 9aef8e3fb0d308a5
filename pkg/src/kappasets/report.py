"""Structured run reports: a human-readable text document plus a JSON twin.

The report body is deterministic for fixed inputs and tool version; wall
times and the generation timestamp live in a separate run_meta section
that is excluded from the content hash, so bodies are byte-stable across
runs. Reports are written to an output directory keyed by timestamp and
body content hash.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

TOOL_NAME = "kappasets"
TOOL_VERSION = "0.1.0"

STATUSES = ("pass", "fail", "inconclusive")


@dataclass
class ClaimRecord:
    """One verified (or refuted, or budget-stopped) claim."""

    claim_id: str
    anchor: str  # the property being checked, stated in words
    status: str
    detail: str = ""
    nodes: int = 0
    wall_time_s: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}, got {self.status!r}")


@dataclass
class RunReport:
    command: str
    claims: list[ClaimRecord] = field(default_factory=list)

    def body_dict(self) -> dict:
        return {
            "tool": TOOL_NAME,
            "version": TOOL_VERSION,
            "command": self.command,
            "claims": [
                {
                    "claim_id": c.claim_id,
                    "anchor": c.anchor,
                    "status": c.status,
                    "detail": c.detail,
                    "nodes": c.nodes,
                }
                for c in self.claims
            ],
        }

    def content_hash(self) -> str:
        blob = json.dumps(self.body_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:12]

    def exit_status(self) -> int:
        """0 all pass, 1 any failure, 3 inconclusive only (budget)."""
        statuses = {c.status for c in self.claims}
        if "fail" in statuses:
            return 1
        if "inconclusive" in statuses:
            return 3
        return 0

    def text_body(self) -> str:
        lines = [
            f"{TOOL_NAME} report",
            f"version: {TOOL_VERSION}",
            f"command: {self.command}",
            f"content-hash: {self.content_hash()}",
            "",
        ]
        for c in self.claims:
            lines.append(f"[claim {c.claim_id}]")
            lines.append(f"anchor: {c.anchor}")
            lines.append(f"status: {c.status}")
            if c.detail:
                lines.append(f"detail: {c.detail}")
            lines.append(f"nodes: {c.nodes}")
            lines.append("")
        return "\n".join(lines)

    def run_meta(self) -> dict:
        return {
            "generated_at": datetime.now(timezone.utc).isoformat(),
            "wall_time_s": {c.claim_id: round(c.wall_time_s, 6) for c in self.claims},
            "total_wall_time_s": round(sum(c.wall_time_s for c in self.claims), 6),
        }


def write_report(report: RunReport, out_root: str | Path) -> Path:
    """Write report.txt and report.json under <out_root>/<timestamp>-<hash>/."""
    meta = report.run_meta()
    stamp = time.strftime("%Y%m%dT%H%M%SZ", time.gmtime())
    out_dir = Path(out_root) / f"{stamp}-{report.content_hash()}"
    suffix = 0
    while out_dir.exists():  # same second, same content: disambiguate
        suffix += 1
        out_dir = Path(out_root) / f"{stamp}-{report.content_hash()}-{suffix}"
    out_dir.mkdir(parents=True)
    (out_dir / "report.json").write_text(
        json.dumps({"report": report.body_dict(), "run_meta": meta}, indent=2, sort_keys=True)
        + "\n"
    )
    timing_lines = ["timings (excluded from content hash):"]
    for cid, secs in meta["wall_time_s"].items():
        timing_lines.append(f"  {cid}: {secs}s")
    timing_lines.append(f"  total: {meta['total_wall_time_s']}s")
    timing_lines.append(f"generated-at: {meta['generated_at']}")
    (out_dir / "report.txt").write_text(report.text_body() + "\n".join(timing_lines) + "\n")
    return out_dir
