"""Report types shared by the axiom harness and the morphism checks.

The JSON shape is versioned and stable: schema_version, suite, pair,
trials, tolerance, passed, worst_residual, counterexample. Reports may
carry free-form notes; notes are rendered in the text format only and
never serialized, so the JSON schema stays fixed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable

__all__ = ["AxiomReport", "SCHEMA_VERSION", "report_to_dict", "emit_report"]

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of running one law suite against one carrier.

    ``worst_residual`` is the largest normalized residual seen across all
    laws and trials (residuals are scaled by max(1, operand magnitude),
    so the tolerance reads as absolute near zero and relative at scale).
    ``passed`` holds exactly when the worst residual is within tolerance
    and no law failed structurally; a structural failure is recorded in
    ``counterexample`` with finite residuals left intact.
    Counterexamples carry preimages only, ready for JSON.
    """

    suite: str
    pair: tuple[str, str]
    trials: int
    tolerance: float
    passed: bool
    worst_residual: float
    counterexample: dict[str, Any] | None = None
    notes: tuple[str, ...] = field(default=(), compare=False)


def report_to_dict(r: AxiomReport) -> dict[str, Any]:
    """The stable serialized form (fixed key order, no notes)."""
    return {
        "schema_version": SCHEMA_VERSION,
        "suite": r.suite,
        "pair": list(r.pair),
        "trials": r.trials,
        "tolerance": r.tolerance,
        "passed": r.passed,
        "worst_residual": r.worst_residual,
        "counterexample": r.counterexample,
    }


def emit_report(reports: Iterable[AxiomReport], format: str = "text") -> str:
    """Render reports as a human-readable block or a JSON document."""
    reports = list(reports)
    if format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "overall": "ok" if all(r.passed for r in reports) else "fail",
            "reports": [report_to_dict(r) for r in reports],
        }
        return json.dumps(doc, indent=2, allow_nan=False)
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        lines.append(
            f"suite={r.suite} pair={r.pair[0]},{r.pair[1]}"
            f" trials={r.trials} tol={r.tolerance:g}"
            f" worst={r.worst_residual:.3e} {status}"
        )
        for note in r.notes:
            lines.append(f"  note: {note}")
        if r.counterexample is not None:
            lines.append(f"  counterexample: {json.dumps(r.counterexample)}")
    lines.append(
        "overall: " + ("ok" if all(r.passed for r in reports) else "fail")
    )
    return "\n".join(lines)
