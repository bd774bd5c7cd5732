"""Check results, report emission (TSV / JSON) and report figures.

Two runs with the same configuration produce byte-identical JSON reports
once the volatile fields (``generated_at`` and the per-claim ``wall_ms``)
are normalized; ``normalized_report`` does exactly that and is what golden
comparisons use.
"""

from __future__ import annotations

import copy
import datetime
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

SCHEMA = "verify-report/1"

EXIT_OK = 0
EXIT_UNKNOWN = 2
EXIT_REFUTED = 3

__all__ = [
    "CheckResult",
    "emit_report",
    "exit_code_for",
    "normalized_report",
    "render_report_figure",
    "report_json",
    "report_text",
]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one registered claim check.

    ``status`` is PROVED / REFUTED / UNKNOWN / OBSERVED; OBSERVED covers
    sampled universals (a pass is evidence, not proof) and recorded
    discrepancies, with ``evidence["agrees"]`` set for the latter.
    """

    claim_id: str
    suite: str
    statement: str
    status: str
    q: int | None
    wall_ms: float
    config: dict = field(default_factory=dict)
    evidence: dict = field(default_factory=dict)


def _sanitize(obj):
    if isinstance(obj, dict):
        return {str(k): _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    if isinstance(obj, float) and math.isinf(obj):
        return "inf"
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return str(obj)


def result_json(r: CheckResult) -> dict:
    return {
        "claim_id": r.claim_id,
        "suite": r.suite,
        "statement": r.statement,
        "status": r.status,
        "q": r.q,
        "wall_ms": round(r.wall_ms, 3),
        "config": _sanitize(r.config),
        "evidence": _sanitize(r.evidence),
    }


def _summary(results) -> dict:
    out = {"PROVED": 0, "REFUTED": 0, "UNKNOWN": 0, "OBSERVED": 0}
    discrepancies = 0
    for r in results:
        out[r.status] = out.get(r.status, 0) + 1
        if r.status == "OBSERVED" and r.evidence.get("agrees") is False:
            discrepancies += 1
    out["observed_discrepancies"] = discrepancies
    return out


def exit_code_for(results) -> int:
    summary = _summary(results)
    if summary["REFUTED"] or summary["observed_discrepancies"]:
        return EXIT_REFUTED
    if summary["UNKNOWN"]:
        return EXIT_UNKNOWN
    return EXIT_OK


def report_json(results, config: dict | None = None) -> dict:
    results = sorted(results, key=lambda r: r.claim_id)
    return {
        "schema": SCHEMA,
        "generated_at": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "config": _sanitize(config or {}),
        "results": [result_json(r) for r in results],
        "summary": _summary(results),
        "exit_code": exit_code_for(results),
    }


def normalized_report(report: dict) -> dict:
    """Strip the volatile fields so reports can be compared byte for byte."""
    out = copy.deepcopy(report)
    out["generated_at"] = None
    for r in out.get("results", []):
        r["wall_ms"] = 0
    return out


def _note(r: CheckResult) -> str:
    ev = r.evidence
    if "agrees" in ev:
        return "agree" if ev["agrees"] else "DISCREPANCY"
    for key in ("note", "samples", "proved", "counts"):
        if key in ev:
            return f"{key}={ev[key]}"
    return ""


def report_text(results) -> str:
    """Tab-delimited table, one row per claim."""
    results = sorted(results, key=lambda r: r.claim_id)
    lines = ["claim_id\tsuite\tq\tstatus\twall_ms\tnote"]
    for r in results:
        q = "" if r.q is None else str(r.q)
        lines.append(
            f"{r.claim_id}\t{r.suite}\t{q}\t{r.status}\t{r.wall_ms:.1f}\t{_note(r)}"
        )
    summary = _summary(results)
    lines.append(
        "# summary\t"
        + "\t".join(f"{k}={v}" for k, v in sorted(summary.items()))
        + f"\texit={exit_code_for(results)}"
    )
    return "\n".join(lines) + "\n"


def emit_report(
    results,
    fmt: str = "text",
    path: str | Path | None = None,
    config: dict | None = None,
    figures: bool = False,
) -> str:
    """Render the report; write it to ``path`` when given.  With
    ``figures`` enabled a summary figure is rendered next to the report."""
    if fmt == "json":
        body = json.dumps(report_json(results, config), indent=2, sort_keys=True) + "\n"
    elif fmt == "text":
        body = report_text(results)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    if path is not None:
        path = Path(path)
        path.write_text(body)
        if figures:
            render_report_figure(results, path.with_suffix(".png"))
    elif figures:
        render_report_figure(results, Path("report.png"))
    return body


_STATUS_COLORS = {
    "PROVED": "#2a9d3f",
    "OBSERVED": "#2769b0",
    "UNKNOWN": "#e0a426",
    "REFUTED": "#c9302c",
}


def render_report_figure(results, path: str | Path) -> Path:
    """Horizontal wall-time bars per claim, colored by status."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Patch

    results = sorted(results, key=lambda r: r.claim_id, reverse=True)
    labels = [r.claim_id for r in results]
    times = [max(r.wall_ms, 0.01) for r in results]
    colors = []
    for r in results:
        color = _STATUS_COLORS.get(r.status, "#777777")
        if r.status == "OBSERVED" and r.evidence.get("agrees") is False:
            color = _STATUS_COLORS["REFUTED"]
        colors.append(color)
    height = max(2.0, 0.32 * len(results) + 1.2)
    fig, ax = plt.subplots(figsize=(9, height))
    ax.barh(range(len(results)), times, color=colors)
    ax.set_yticks(range(len(results)))
    ax.set_yticklabels(labels, fontsize=7)
    ax.set_xscale("log")
    ax.set_xlabel("wall time (ms)")
    summary = _summary(results)
    ax.set_title(
        " / ".join(f"{k} {v}" for k, v in sorted(summary.items()) if v), fontsize=9
    )
    ax.legend(
        handles=[Patch(color=c, label=s) for s, c in _STATUS_COLORS.items()],
        fontsize=7,
        loc="lower right",
    )
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
